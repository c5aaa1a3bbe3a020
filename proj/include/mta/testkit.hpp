#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mta/motif_store.hpp"
#include "mta/series.hpp"

namespace mta::testkit {

/// SplitMix64 (Steele, Lea, Flood 2014). 64 bits of state, fully specified,
/// so seeds reproduce across platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on (0, 1): top 53 bits, offset by half a ulp so 0 never occurs.
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; both variates of a pair are used.
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct PlantedMotifSpec {
  std::vector<double> pattern;          // increments, length L
  std::vector<std::size_t> positions;   // raw-axis starts

  std::size_t length() const noexcept { return pattern.size(); }
};

using OccurrencePair = std::pair<std::size_t, std::size_t>;

/// Every window pair (i, j), i < j, j - i >= L, whose L/s aligned subsets
/// of the raw differences are all within r. No symbols, no elimination.
std::vector<OccurrencePair> brute_force_pairs(const PreprocessedSeries& pre, std::size_t L,
                                              std::size_t s, const MatchThreshold& thr);

/// Cumulative sum of SplitMix64/Box-Muller N(0,1) steps starting at 0, each
/// step snapped to a multiple of 2^-20 so sums are exact.
TimeSeries random_walk(std::size_t length, std::uint64_t seed);

/// Overwrites the increments at each planted position with the spec's
/// pattern and re-integrates, so the differenced series holds exact copies.
TimeSeries embed_motifs(const TimeSeries& series, const std::vector<PlantedMotifSpec>& specs);

/// Random pattern of `length` N(0, step_sigma^2) increments clipped to
/// +/- 2 step_sigma and snapped to the same 2^-20 grid as random_walk.
std::vector<double> random_pattern(std::size_t length, double step_sigma, SplitMix64& rng);

struct Benchmark {
  TimeSeries series;
  std::vector<PlantedMotifSpec> truth;
};

/// Length-400 random walk with motif A (L=40) at {47, 160} and motif B
/// (L=40) at {100, 230}.
Benchmark make_benchmark_61(std::uint64_t seed);

/// Random walk of `length` with one random pattern per (length, positions)
/// entry planted at every listed position.
Benchmark make_benchmark(std::size_t length, std::uint64_t seed,
                         const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& plants);

}  // namespace mta::testkit
