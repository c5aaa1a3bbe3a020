#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mta/motif_store.hpp"
#include "mta/series.hpp"

namespace mta {

/// Match allowance per time point, either absolute (differenced units) or
/// as a fraction of the differenced series' standard deviation.
struct ThresholdSpec {
  enum class Kind { Absolute, FractionOfSigma };
  Kind kind = Kind::Absolute;
  double value = 0.5;

  static ThresholdSpec absolute(double d) { return {Kind::Absolute, d}; }
  static ThresholdSpec fraction(double f) { return {Kind::FractionOfSigma, f}; }

  double resolve(double sigma_diff) const {
    return kind == Kind::Absolute ? value : value * sigma_diff;
  }
};

struct MtaConfig {
  std::size_t s = 10;
  int a = 6;
  ThresholdSpec threshold;
  /// Unset means the structural maximum floor(len(norm) / s).
  std::optional<std::size_t> max_generations;
  std::size_t min_occurrences = 2;

  /// Throws ConfigInvalid / AlphabetOutOfRange / NegativeThreshold.
  void validate() const;
};

struct GenerationTrace {
  std::size_t generation = 0;
  std::size_t stage_candidates = 0;
  std::size_t stage_words = 0;
  std::size_t trackers_in = 0;
  std::size_t trackers_after_match = 0;
  std::size_t trackers_after_confirm = 0;
  std::size_t motifs_confirmed = 0;
};

struct RunResult {
  MotifCatalog catalog;
  /// Catalog as accumulated across generations, before streamlining.
  MotifCatalog raw_catalog;
  PreprocessedSeries series;
  std::size_t generations_run = 0;
  /// Whole run() wall time. Fractional so that sub-millisecond runs still
  /// yield a usable efficiency metric.
  double elapsed_ms = 0.0;
  MtaConfig config;
  double per_point_threshold = 0.0;
  std::size_t max_generations = 0;
  std::vector<GenerationTrace> trace;
};

RunResult run(const TimeSeries& series, const MtaConfig& config);

}  // namespace mta
