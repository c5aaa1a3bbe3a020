#include "mta/driver.hpp"

#include <chrono>
#include <cmath>
#include <string_view>
#include <unordered_map>

#include "mta/error.hpp"
#include "mta/sax.hpp"
#include "mta/stage.hpp"
#include "mta/tracker.hpp"

namespace mta {

void MtaConfig::validate() const {
  if (s < 1) throw MtaError(ErrorCode::ConfigInvalid, "symbol length must be >= 1");
  if (a < 2 || a > kMaxAlphabet) {
    throw MtaError(ErrorCode::AlphabetOutOfRange,
                   "alphabet size must be in [2, 26], got " + std::to_string(a));
  }
  if (!(threshold.value >= 0.0) || !std::isfinite(threshold.value)) {
    throw MtaError(ErrorCode::NegativeThreshold, "threshold must be finite and >= 0");
  }
  if (max_generations && *max_generations < 1) {
    throw MtaError(ErrorCode::ConfigInvalid, "max generations must be >= 1");
  }
  if (min_occurrences < 2) {
    throw MtaError(ErrorCode::ConfigInvalid, "a motif needs at least 2 occurrences");
  }
}

RunResult run(const TimeSeries& series, const MtaConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  config.validate();

  RunResult result;
  result.config = config;
  result.series = preprocess(series);
  const PreprocessedSeries& pre = result.series;
  const std::size_t s = config.s;
  if (pre.norm.size() < s) {
    throw MtaError(ErrorCode::SeriesTooShort,
                   "series too short for symbol length " + std::to_string(s));
  }

  const Alphabet alphabet(config.a);
  const MatchThreshold thr(config.threshold.resolve(pre.sigma_diff), s);
  result.per_point_threshold = thr.per_point();
  result.max_generations = config.max_generations.value_or(pre.norm.size() / s);

  const SymbolMatrix symbols = build_symbol_matrix(pre, s, alphabet);
  MotifCatalog& catalog = result.raw_catalog;
  catalog.series_length = pre.diff.size();

  TrackerPopulation pop = init_population(alphabet);
  MutationTemplate tmpl;

  for (std::size_t g = 1; g <= result.max_generations && !pop.empty(); ++g) {
    GenerationTrace tr;
    tr.generation = g;
    tr.trackers_in = pop.size();

    const StageMatrix stage = build_stage(symbols, g, s);
    tr.stage_candidates = stage.candidate_count;
    tr.stage_words = stage.words.size();
    if (stage.empty()) break;
    result.generations_run = g;

    pop = match_trackers(std::move(pop), stage);
    pop = eliminate_unstimulated(std::move(pop), config.min_occurrences);
    tr.trackers_after_match = pop.size();

    // Index the stage by symbol string once; each tracker then only visits
    // its own words.
    std::unordered_map<std::string_view, std::vector<Word>> by_symbols;
    for (const auto& t : pop.trackers()) by_symbols.try_emplace(t.symbols);
    for (const auto& w : stage.words) {
      const auto it = by_symbols.find(w.symbols);
      if (it != by_symbols.end()) it->second.push_back(w);
    }
    for (auto& t : pop.trackers()) {
      Confirmation c = confirm_motifs(t, by_symbols.at(t.symbols), pre, s, thr);
      t.match_count += c.stimulation;
      for (auto& m : c.motifs) {
        if (m.occurrences.size() >= config.min_occurrences && store(catalog, std::move(m))) {
          ++tr.motifs_confirmed;
        }
      }
    }
    pop = eliminate_unstimulated(std::move(pop), 1);
    tr.trackers_after_confirm = pop.size();
    result.trace.push_back(tr);

    if (g == 1) tmpl.capture(pop);
    if (pop.empty() || tmpl.empty()) break;
    pop = proliferate_and_mutate(pop, tmpl);
  }

  result.catalog = streamline(catalog);
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace mta
