#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mta/driver.hpp"

namespace mta {

/// Half-open interval [begin, end) on the differenced axis.
struct Interval {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Catalog statistics C1..C8 plus the derived quality and efficiency
/// metrics MQ = C2*C3/C6 and ME = C5 / (C7 in seconds).
struct RunStats {
  std::size_t C1 = 0;  // motif count
  std::size_t C2 = 0;  // total occurrences
  double C3 = 0.0;     // mean motif length
  double C4 = 0.0;     // population std of motif length
  double C5 = 0.0;     // percent of the series covered
  double C6 = 0.0;     // mean over motifs of mean pairwise full-length distance
  double C7 = 0.0;     // run time, milliseconds
  std::size_t C8 = 0;  // length of the longest motif touching the reference window
  double MQ = 0.0;
  double ME = 0.0;
};

/// Throws DegenerateDistance when C6 == 0 with motifs present.
double motif_quality(const RunStats& stats);

/// Throws ZeroRuntime when C7 == 0 with nonzero coverage.
double motif_efficiency(const RunStats& stats);

/// Mean pairwise full-length Euclidean distance between a motif's
/// occurrences, measured on the raw differences.
double mean_pairwise_distance(const MemoryMotif& motif, const std::vector<double>& diff);

/// Percent of `series_length` points covered by at least one occurrence.
double coverage_percent(const MotifCatalog& catalog);

/// Statistics for `catalog` measured against `diff`. MQ falls back to 0 when
/// C6 is 0 (every motif an exact repeat); ME falls back to 0 when C7 is 0.
RunStats compute_stats(const MotifCatalog& catalog, const std::vector<double>& diff,
                       double elapsed_ms, std::optional<Interval> reference_window = {});

RunStats compute_stats(const RunResult& result, std::optional<Interval> reference_window = {});

struct SweepRow {
  MtaConfig config;
  std::optional<RunStats> stats;
  std::string error;
};

/// Runs every config independently (in parallel) and returns rows in grid order.
std::vector<SweepRow> sweep(const TimeSeries& series, const std::vector<MtaConfig>& grid,
                            std::optional<Interval> reference_window = {},
                            unsigned max_threads = 0);

}  // namespace mta
