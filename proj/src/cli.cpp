#include "mta/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mta/analytics.hpp"
#include "mta/driver.hpp"
#include "mta/error.hpp"
#include "mta/io.hpp"
#include "mta/testkit.hpp"

namespace mta::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
      return kIoError;
    case ErrorCode::SeriesTooShort:
    case ErrorCode::ZeroVariance:
    case ErrorCode::NonFiniteValue:
      return kDegenerateSeries;
    default:
      return kConfigError;
  }
}

std::optional<Interval> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw MtaError(ErrorCode::ConfigInvalid, "reference window must be BEGIN:END");
  }
  try {
    Interval w{std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
    if (w.end <= w.begin) throw MtaError(ErrorCode::ConfigInvalid, "empty reference window");
    return w;
  } catch (const std::logic_error&) {
    throw MtaError(ErrorCode::ConfigInvalid, "reference window must be BEGIN:END");
  }
}

// "40@47,160" -> (40, {47, 160})
std::pair<std::size_t, std::vector<std::size_t>> parse_plant(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw MtaError(ErrorCode::ConfigInvalid, "plant must be LEN@P1,P2,...");
  try {
    std::size_t len = std::stoul(text.substr(0, at));
    std::vector<std::size_t> positions;
    std::stringstream ss(text.substr(at + 1));
    std::string item;
    while (std::getline(ss, item, ',')) positions.push_back(std::stoul(item));
    if (len == 0 || positions.size() < 2) {
      throw MtaError(ErrorCode::ConfigInvalid, "plant needs a length and at least 2 positions");
    }
    return {len, positions};
  } catch (const std::logic_error&) {
    throw MtaError(ErrorCode::ConfigInvalid, "plant must be LEN@P1,P2,...");
  }
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    io::write_atomic(path, contents);
  }
}

struct DiscoverOptions {
  std::string input;
  std::string column = "0";
  std::size_t s = 10;
  int a = 6;
  std::optional<double> threshold;
  std::optional<double> threshold_frac;
  std::optional<std::size_t> max_generations;
  std::string output;
  std::string format = "json";
  std::string occurrences_csv;
  std::string reference_window;
};

int do_discover(const DiscoverOptions& o, std::ostream& out) {
  const TimeSeries series = io::load_csv(o.input, o.column);
  MtaConfig cfg;
  cfg.s = o.s;
  cfg.a = o.a;
  cfg.threshold = o.threshold_frac ? ThresholdSpec::fraction(*o.threshold_frac)
                                   : ThresholdSpec::absolute(o.threshold.value_or(0.5));
  cfg.max_generations = o.max_generations;
  const auto window = parse_window(o.reference_window);

  const RunResult result = run(series, cfg);
  const RunStats stats = compute_stats(result, window);
  if (o.format == "csv") {
    emit(o.output, io::occurrences_csv(result.catalog), out);
  } else {
    emit(o.output, io::catalog_document(result, stats).dump(2) + "\n", out);
  }
  if (!o.occurrences_csv.empty()) io::write_atomic(o.occurrences_csv, io::occurrences_csv(result.catalog));
  return kOk;
}

struct SweepOptions {
  std::string input;
  std::string column = "0";
  std::size_t s = 10;
  int a = 6;
  double r = 0.5;
  bool frac = false;
  std::vector<std::size_t> sweep_s;
  std::vector<double> sweep_r;
  std::vector<int> sweep_a;
  std::optional<std::size_t> max_generations;
  std::string output;
  std::string format = "csv";
  std::string reference_window;
  unsigned threads = 0;
};

int do_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  auto base = [&] {
    MtaConfig c;
    c.s = o.s;
    c.a = o.a;
    c.threshold = o.frac ? ThresholdSpec::fraction(o.r) : ThresholdSpec::absolute(o.r);
    c.max_generations = o.max_generations;
    return c;
  };
  std::vector<MtaConfig> grid;
  for (std::size_t s : o.sweep_s) {
    auto c = base();
    c.s = s;
    grid.push_back(c);
  }
  for (double r : o.sweep_r) {
    auto c = base();
    c.threshold.value = r;
    grid.push_back(c);
  }
  for (int a : o.sweep_a) {
    auto c = base();
    c.a = a;
    grid.push_back(c);
  }
  if (grid.empty()) {
    err << "error: empty sweep grid (use --sweep-s, --sweep-r or --sweep-a)\n";
    return kConfigError;
  }

  const TimeSeries series = io::load_csv(o.input, o.column);
  preprocess(series);  // degenerate input fails every row; report it once
  const auto rows = sweep(series, grid, parse_window(o.reference_window), o.threads);

  if (o.output.empty() || o.output == "-") {
    out << (o.format == "json" ? io::sweep_json(rows).dump(2) + "\n" : io::sweep_csv(rows));
  } else {
    io::write_atomic(o.output + ".csv", io::sweep_csv(rows));
    io::write_atomic(o.output + ".json", io::sweep_json(rows).dump(2) + "\n");
  }
  const bool any_ok = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.stats.has_value(); });
  for (const auto& row : rows) {
    if (!row.error.empty()) err << "row s=" << row.config.s << " a=" << row.config.a << ": " << row.error << '\n';
  }
  return any_ok ? kOk : kConfigError;
}

struct SynthOptions {
  std::uint64_t seed = 1;
  std::size_t length = 400;
  std::vector<std::string> plants;
  std::string output;
  std::string truth;
};

int do_synth(const SynthOptions& o, std::ostream& out) {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> plants;
  for (const auto& p : o.plants) plants.push_back(parse_plant(p));
  if (plants.empty()) plants = {{40, {47, 160}}, {40, {100, 230}}};
  if (o.length < 2) throw MtaError(ErrorCode::ConfigInvalid, "length must be >= 2");

  testkit::Benchmark bench;
  try {
    bench = testkit::make_benchmark(o.length, o.seed, plants);
  } catch (const MtaError& e) {
    // Placement problems are configuration errors, not degenerate data.
    throw MtaError(ErrorCode::ConfigInvalid, e.what());
  }
  emit(o.output, io::series_to_csv(bench.series), out);
  std::string truth = o.truth;
  if (truth.empty() && !o.output.empty() && o.output != "-") {
    std::filesystem::path p(o.output);
    truth = (p.parent_path() / (p.stem().string() + "_truth.json")).string();
  }
  if (!truth.empty()) io::write_atomic(truth, io::truth_document(bench, o.seed).dump(2) + "\n");
  return kOk;
}

struct OverlayOptions {
  std::string catalog;
  std::string series;
  std::string column = "0";
  std::size_t motif = 0;
  std::string output;
};

int do_overlay(const OverlayOptions& o, std::ostream& out) {
  std::ifstream in(o.catalog);
  if (!in) throw MtaError(ErrorCode::IoError, "cannot open '" + o.catalog + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw MtaError(ErrorCode::ConfigInvalid, std::string("malformed catalog: ") + e.what());
  }
  const MotifCatalog catalog = io::catalog_from_document(doc);
  if (o.motif >= catalog.motifs.size()) {
    throw MtaError(ErrorCode::ConfigInvalid, "unknown motif id " + std::to_string(o.motif));
  }
  const TimeSeries series = io::load_csv(o.series, o.column);
  emit(o.output, io::overlay_csv(catalog.motifs[o.motif], series), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motif discovery by symbolic tracker evolution", "mta"};
  app.require_subcommand(1);

  DiscoverOptions dis;
  auto* discover = app.add_subcommand("discover", "Find repeating motifs in a series");
  discover->add_option("input", dis.input, "CSV file")->required();
  discover->add_option("--column", dis.column, "Column index or header name")->capture_default_str();
  discover->add_option("-s,--symbol-length", dis.s, "Time points per symbol")->capture_default_str();
  discover->add_option("-a,--alphabet", dis.a, "Alphabet size (2-26)")->capture_default_str();
  auto* thr = discover->add_option("--threshold", dis.threshold,
                                   "Per-point allowance D in differenced units (default 0.5)");
  auto* frac = discover->add_option("--threshold-frac", dis.threshold_frac,
                                    "Per-point allowance as a fraction of sigma(diff)");
  thr->excludes(frac);
  discover->add_option("--max-generations", dis.max_generations, "Generation cap");
  discover->add_option("-o,--output", dis.output, "Output file (default stdout)");
  discover->add_option("--format", dis.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  discover->add_option("--occurrences-csv", dis.occurrences_csv, "Also write the occurrence table");
  discover->add_option("--reference-window", dis.reference_window, "BEGIN:END window for C8");

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sensitivity sweep");
  sweep_cmd->add_option("input", sw.input, "CSV file")->required();
  sweep_cmd->add_option("--column", sw.column)->capture_default_str();
  sweep_cmd->add_option("-s,--symbol-length", sw.s, "Baseline symbol length")->capture_default_str();
  sweep_cmd->add_option("-a,--alphabet", sw.a, "Baseline alphabet size")->capture_default_str();
  sweep_cmd->add_option("--threshold", sw.r, "Baseline per-point allowance")->capture_default_str();
  sweep_cmd->add_flag("--frac", sw.frac, "Interpret thresholds as fractions of sigma(diff)");
  sweep_cmd->add_option("--sweep-s", sw.sweep_s, "Symbol lengths to try")->delimiter(',');
  sweep_cmd->add_option("--sweep-r", sw.sweep_r, "Thresholds to try")->delimiter(',');
  sweep_cmd->add_option("--sweep-a", sw.sweep_a, "Alphabet sizes to try")->delimiter(',');
  sweep_cmd->add_option("--max-generations", sw.max_generations);
  sweep_cmd->add_option("-o,--output", sw.output, "Output prefix; writes PREFIX.csv and PREFIX.json");
  sweep_cmd->add_option("--format", sw.format, "stdout format: csv or json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sweep_cmd->add_option("--reference-window", sw.reference_window, "BEGIN:END window for C8");
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");

  SynthOptions sy;
  auto* synth = app.add_subcommand("synth", "Random walk with planted motifs");
  synth->add_option("--seed", sy.seed)->capture_default_str();
  synth->add_option("--length", sy.length)->capture_default_str();
  synth->add_option("--plant", sy.plants, "LEN@P1,P2,... (repeatable); default 40@47,160 40@100,230");
  synth->add_option("-o,--output", sy.output, "Series CSV (default stdout)");
  synth->add_option("--truth", sy.truth, "Ground-truth JSON (default <output>_truth.json)");

  OverlayOptions ov;
  auto* overlay = app.add_subcommand("overlay", "Plot-ready columns for one motif");
  overlay->add_option("catalog", ov.catalog, "Catalog JSON from discover")->required();
  overlay->add_option("series", ov.series, "Series CSV")->required();
  overlay->add_option("--column", ov.column)->capture_default_str();
  overlay->add_option("--motif", ov.motif, "Motif id")->required();
  overlay->add_option("-o,--output", ov.output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfigError;
  }

  try {
    if (*discover) return do_discover(dis, out);
    if (*sweep_cmd) return do_sweep(sw, out, err);
    if (*synth) return do_synth(sy, out);
    if (*overlay) return do_overlay(ov, out);
  } catch (const MtaError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kConfigError;
}

}  // namespace mta::cli
