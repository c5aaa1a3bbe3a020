#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mta/series.hpp"
#include "mta/stage.hpp"
#include "mta/tracker.hpp"

namespace mta {

/// Per-subset Euclidean allowance r = D * s.
class MatchThreshold {
 public:
  MatchThreshold(double per_point, std::size_t s);

  double per_point() const noexcept { return per_point_; }
  double r() const noexcept { return r_; }

 private:
  double per_point_;
  double r_;
};

MatchThreshold make_threshold(double per_point, std::size_t s);

/// A confirmed motif. Occurrence starts are on the differenced axis and
/// pairwise at least `length` apart.
struct MemoryMotif {
  std::string symbols;
  std::size_t length = 0;
  std::vector<std::size_t> occurrences;
  double max_subset_distance = 0.0;
};

struct MotifCatalog {
  std::vector<MemoryMotif> motifs;
  std::size_t series_length = 0;

  std::size_t size() const noexcept { return motifs.size(); }
  bool empty() const noexcept { return motifs.empty(); }
};

/// Result of comparing two windows subset by subset. `max_distance` is the
/// largest subset distance evaluated; on rejection it is the first one > r.
struct SubsetCheck {
  bool ok = false;
  double max_distance = 0.0;
};

/// Compares the `g` aligned length-s subsets of the windows at x_start and
/// y_start, stopping at the first subset whose distance exceeds r.
SubsetCheck check_subsets(std::size_t x_start, std::size_t y_start,
                          std::span<const double> diff, std::size_t g, std::size_t s,
                          const MatchThreshold& thr);

bool subset_distance_ok(std::size_t x_start, std::size_t y_start,
                        std::span<const double> diff, std::size_t g, std::size_t s,
                        const MatchThreshold& thr);

struct Confirmation {
  std::vector<MemoryMotif> motifs;
  std::size_t stimulation = 0;
};

/// Groups the stage words spelling `tracker` into motifs: the earliest
/// unclaimed word is the pivot, and each later unclaimed word joins if it
/// is non-overlapping with and within threshold of every current member.
/// Stimulation counts accepted joins.
Confirmation confirm_motifs(const Tracker& tracker, std::span<const Word> matching_words,
                            const PreprocessedSeries& pre, std::size_t s,
                            const MatchThreshold& thr);

/// Convenience overload that scans the whole stage for matching words and
/// stores the confirmed motifs in `catalog`.
std::size_t confirm_motifs(const Tracker& tracker, const StageMatrix& stage,
                           const PreprocessedSeries& pre, std::size_t s,
                           const MatchThreshold& thr, MotifCatalog& catalog);

/// Appends unless a motif with the same symbols and occurrences exists.
/// Returns true when appended.
bool store(MotifCatalog& catalog, MemoryMotif motif);

/// Post-run cleanup: drops motifs encapsulated in a longer motif, merges
/// offset-aligned fragments of one pattern, and removes duplicates.
MotifCatalog streamline(MotifCatalog catalog);

}  // namespace mta
