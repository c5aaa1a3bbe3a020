#include "mta/stage.hpp"

#include "mta/error.hpp"

namespace mta {

StageMatrix eliminate_trivial_matches(std::vector<Word> candidates, std::size_t generation,
                                      std::size_t s) {
  StageMatrix stage;
  stage.generation = generation;
  stage.candidate_count = candidates.size();
  stage.words.reserve(candidates.size());

  const std::size_t cap = s == 0 ? 0 : s - 1;
  std::size_t run = 0;
  for (auto& w : candidates) {
    if (!stage.words.empty() && w.symbols == stage.words.back().symbols && run < cap) {
      ++run;
      ++stage.eliminated_count;
      continue;
    }
    run = 0;
    stage.words.push_back(std::move(w));
  }
  return stage;
}

StageMatrix build_stage(const SymbolMatrix& symbols, std::size_t generation, std::size_t s) {
  if (generation == 0 || s == 0) {
    throw MtaError(ErrorCode::ConfigInvalid, "generation and symbol length must be >= 1");
  }
  const std::size_t n = symbols.size();
  const std::size_t span = (generation - 1) * s;
  std::vector<Word> candidates;
  if (span < n) {
    candidates.reserve(n - span);
    for (std::size_t i = 0; i + span < n; ++i) {
      Word w;
      w.start = symbols.entries[i].start;
      w.covered_length = generation * s;
      w.symbols.reserve(generation);
      for (std::size_t k = 0; k < generation; ++k) {
        w.symbols.push_back(symbols.entries[i + k * s].symbols.front());
      }
      candidates.push_back(std::move(w));
    }
  }
  return eliminate_trivial_matches(std::move(candidates), generation, s);
}

}  // namespace mta
