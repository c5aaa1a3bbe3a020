#include "mta/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mta/error.hpp"

namespace mta::io {

using nlohmann::json;

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

TimeSeries load_csv(const std::filesystem::path& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw MtaError(ErrorCode::IoError, "cannot open '" + path.string() + "'");

  std::optional<std::size_t> index = parse_index(column);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (first) {
      first = false;
      if (!index) {
        // Named column: the first line must be a header containing it.
        for (std::size_t i = 0; i < fields.size() && !index; ++i) {
          if (fields[i] == column) index = i;
        }
        if (!index) {
          throw MtaError(ErrorCode::ConfigInvalid, "column '" + column + "' not found in header");
        }
        continue;
      }
      if (*index < fields.size() && !parse_double(fields[*index])) continue;  // header row
    }
    if (*index >= fields.size()) {
      throw MtaError(ErrorCode::IoError, path.string() + ":" + std::to_string(line_no) +
                                             ": missing column " + std::to_string(*index));
    }
    const auto v = parse_double(fields[*index]);
    if (!v) {
      throw MtaError(ErrorCode::IoError, path.string() + ":" + std::to_string(line_no) +
                                             ": not a number: '" +
                                             std::string(fields[*index]) + "'");
    }
    if (!std::isfinite(*v)) {
      throw MtaError(ErrorCode::NonFiniteValue, path.string() + ":" + std::to_string(line_no) +
                                                    ": non-finite value");
    }
    values.push_back(*v);
  }
  if (in.bad()) throw MtaError(ErrorCode::IoError, "read error on '" + path.string() + "'");
  return TimeSeries(std::move(values), path.stem().string());
}

std::string series_to_csv(const TimeSeries& series) {
  std::string out;
  for (double v : series.values()) {
    out += shortest(v);
    out += '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw MtaError(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw MtaError(ErrorCode::IoError, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw MtaError(ErrorCode::IoError, "cannot move output into '" + path.string() + "'");
  }
}

json config_to_json(const RunResult& result) {
  const MtaConfig& c = result.config;
  json j;
  j["symbol_length"] = c.s;
  j["alphabet"] = c.a;
  j["threshold"] = {
      {"kind", c.threshold.kind == ThresholdSpec::Kind::Absolute ? "absolute" : "fraction_of_sigma"},
      {"value", round15(c.threshold.value)}};
  j["per_point_threshold"] = round15(result.per_point_threshold);
  j["match_threshold_r"] = round15(result.per_point_threshold * static_cast<double>(c.s));
  j["max_generations"] = result.max_generations;
  j["min_occurrences"] = c.min_occurrences;
  return j;
}

json stats_to_json(const RunStats& st) {
  return json{{"C1", st.C1},         {"C2", st.C2},         {"C3", round15(st.C3)},
              {"C4", round15(st.C4)}, {"C5", round15(st.C5)}, {"C6", round15(st.C6)},
              {"C7", round15(st.C7)}, {"C8", st.C8},         {"MQ", round15(st.MQ)},
              {"ME", round15(st.ME)}};
}

json catalog_document(const RunResult& result, const RunStats& stats) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = config_to_json(result);
  doc["series"] = {{"label", result.series.raw.label()},
                   {"length", result.series.raw.size()},
                   {"diff_length", result.series.diff.size()},
                   {"sigma_diff", round15(result.series.sigma_diff)}};
  // A differenced-axis start p covers increments p..p+length-1, i.e. raw
  // points p..p+length, so both axes share the same start index.
  doc["axis_mapping"] = "raw_start = diff_start";
  doc["generations_run"] = result.generations_run;

  json motifs = json::array();
  for (std::size_t i = 0; i < result.catalog.motifs.size(); ++i) {
    const auto& m = result.catalog.motifs[i];
    motifs.push_back({{"id", i},
                      {"symbols", m.symbols},
                      {"length", m.length},
                      {"occurrences_diff", m.occurrences},
                      {"occurrences_raw", m.occurrences},
                      {"max_subset_distance", round15(m.max_subset_distance)}});
  }
  doc["motifs"] = std::move(motifs);
  doc["stats"] = stats_to_json(stats);

  json trace = json::array();
  for (const auto& t : result.trace) {
    trace.push_back({{"generation", t.generation},
                     {"stage_candidates", t.stage_candidates},
                     {"stage_words", t.stage_words},
                     {"trackers_in", t.trackers_in},
                     {"trackers_after_match", t.trackers_after_match},
                     {"trackers_after_confirm", t.trackers_after_confirm},
                     {"motifs_confirmed", t.motifs_confirmed}});
  }
  doc["trace"] = std::move(trace);
  doc["timing"] = {{"elapsed_ms", round15(result.elapsed_ms)}};
  return doc;
}

void validate_catalog(const MotifCatalog& catalog) {
  for (std::size_t i = 0; i < catalog.motifs.size(); ++i) {
    const auto& m = catalog.motifs[i];
    const std::string where = "motif " + std::to_string(i);
    if (m.occurrences.size() < 2) {
      throw MtaError(ErrorCode::ConfigInvalid, where + " has fewer than 2 occurrences");
    }
    if (m.length == 0 || m.symbols.empty()) {
      throw MtaError(ErrorCode::ConfigInvalid, where + " is empty");
    }
    for (std::size_t k = 1; k < m.occurrences.size(); ++k) {
      if (m.occurrences[k] < m.occurrences[k - 1] + m.length) {
        throw MtaError(ErrorCode::ConfigInvalid, where + " has overlapping occurrences");
      }
    }
    if (catalog.series_length && m.occurrences.back() + m.length > catalog.series_length) {
      throw MtaError(ErrorCode::ConfigInvalid, where + " runs past the end of the series");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (catalog.motifs[j].symbols == m.symbols &&
          catalog.motifs[j].occurrences == m.occurrences) {
        throw MtaError(ErrorCode::ConfigInvalid, where + " duplicates motif " + std::to_string(j));
      }
    }
  }
}

MotifCatalog catalog_from_document(const json& doc) {
  try {
    if (!doc.contains("schema_version") || doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw MtaError(ErrorCode::ConfigInvalid, "unsupported or missing schema_version");
    }
    MotifCatalog catalog;
    catalog.series_length = doc.at("series").at("diff_length").get<std::size_t>();
    for (const auto& jm : doc.at("motifs")) {
      MemoryMotif m;
      m.symbols = jm.at("symbols").get<std::string>();
      m.length = jm.at("length").get<std::size_t>();
      m.occurrences = jm.at("occurrences_diff").get<std::vector<std::size_t>>();
      m.max_subset_distance = jm.at("max_subset_distance").get<double>();
      if (jm.at("occurrences_raw").get<std::vector<std::size_t>>() != m.occurrences) {
        throw MtaError(ErrorCode::ConfigInvalid, "raw and differenced occurrence starts disagree");
      }
      catalog.motifs.push_back(std::move(m));
    }
    validate_catalog(catalog);
    return catalog;
  } catch (const json::exception& e) {
    throw MtaError(ErrorCode::ConfigInvalid, std::string("malformed catalog document: ") + e.what());
  }
}

std::string occurrences_csv(const MotifCatalog& catalog) {
  std::ostringstream out;
  out << "motif_id,symbols,length,occurrence,start_diff,start_raw\n";
  for (std::size_t i = 0; i < catalog.motifs.size(); ++i) {
    const auto& m = catalog.motifs[i];
    for (std::size_t k = 0; k < m.occurrences.size(); ++k) {
      out << i << ',' << m.symbols << ',' << m.length << ',' << k << ',' << m.occurrences[k] << ','
          << m.occurrences[k] << '\n';
    }
  }
  return out.str();
}

json truth_document(const testkit::Benchmark& bench, std::uint64_t seed) {
  json motifs = json::array();
  for (std::size_t i = 0; i < bench.truth.size(); ++i) {
    const auto& spec = bench.truth[i];
    std::vector<double> pattern;
    pattern.reserve(spec.pattern.size());
    for (double v : spec.pattern) pattern.push_back(round15(v));
    motifs.push_back({{"id", std::string(1, static_cast<char>('A' + i % 26))},
                      {"length", spec.length()},
                      {"positions", spec.positions},
                      {"pattern", pattern}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"generator", "splitmix64+box-muller"},
              {"seed", seed},
              {"length", bench.series.size()},
              {"motifs", motifs}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.precision(15);
  out << "s,r,threshold_kind,a,C1,C2,C3,C4,C5,C6,C7,C8,MQ,ME,error\n";
  for (const auto& row : rows) {
    const auto& c = row.config;
    out << c.s << ',' << c.threshold.value << ','
        << (c.threshold.kind == ThresholdSpec::Kind::Absolute ? "absolute" : "fraction_of_sigma")
        << ',' << c.a << ',';
    if (row.stats) {
      const auto& st = *row.stats;
      out << st.C1 << ',' << st.C2 << ',' << st.C3 << ',' << st.C4 << ',' << st.C5 << ','
          << st.C6 << ',' << st.C7 << ',' << st.C8 << ',' << st.MQ << ',' << st.ME << ',';
    } else {
      out << ",,,,,,,,,,";
    }
    std::string err = row.error;
    for (auto& ch : err) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out << err << '\n';
  }
  return out.str();
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    const auto& c = row.config;
    json j{{"s", c.s},
           {"r", round15(c.threshold.value)},
           {"threshold_kind",
            c.threshold.kind == ThresholdSpec::Kind::Absolute ? "absolute" : "fraction_of_sigma"},
           {"a", c.a}};
    if (row.stats) j.update(stats_to_json(*row.stats));
    j["error"] = row.error.empty() ? json(nullptr) : json(row.error);
    out.push_back(std::move(j));
  }
  return out;
}

std::string overlay_csv(const MemoryMotif& motif, const TimeSeries& series) {
  const auto& occ = motif.occurrences;
  for (std::size_t p : occ) {
    if (p + motif.length >= series.size()) {
      throw MtaError(ErrorCode::OutOfBounds, "motif occurrence at " + std::to_string(p) +
                                                 " runs past the series");
    }
  }
  std::ostringstream out;
  out.precision(15);
  out << 't';
  for (std::size_t k = 0; k < occ.size(); ++k) out << ",occurrence_" << k + 1;
  out << ",mean_of_others\n";
  for (std::size_t t = 0; t <= motif.length; ++t) {
    out << t;
    double others = 0.0;
    for (std::size_t k = 0; k < occ.size(); ++k) {
      const double v = series[occ[k] + t];
      out << ',' << v;
      if (k > 0) others += v;
    }
    out << ',' << others / static_cast<double>(occ.size() - 1) << '\n';
  }
  return out.str();
}

json strip_timing(json doc) {
  doc.erase("timing");
  if (doc.contains("stats")) {
    doc["stats"].erase("C7");
    doc["stats"].erase("ME");
  }
  return doc;
}

}  // namespace mta::io
