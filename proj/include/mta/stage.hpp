#pragma once

#include <cstddef>
#include <vector>

#include "mta/sax.hpp"

namespace mta {

/// Words of one generation after trivial-match elimination.
struct StageMatrix {
  std::size_t generation = 0;
  std::vector<Word> words;
  std::size_t candidate_count = 0;
  std::size_t eliminated_count = 0;

  bool empty() const noexcept { return words.empty(); }
};

/// Builds the generation-g candidates (symbols at i, i+s, ..., i+(g-1)s of
/// the symbol matrix) and removes trivial matches: a candidate equal to the
/// last kept word is dropped, but never more than s-1 in a row.
///
/// Returns an empty stage when no length-g word fits.
StageMatrix build_stage(const SymbolMatrix& symbols, std::size_t generation, std::size_t s);

/// Elimination pass on its own, over already-built candidates.
StageMatrix eliminate_trivial_matches(std::vector<Word> candidates, std::size_t generation,
                                      std::size_t s);

}  // namespace mta
