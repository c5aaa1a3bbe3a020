#include "mta/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "mta/error.hpp"

namespace mta {

double motif_quality(const RunStats& stats) {
  if (stats.C2 == 0) return 0.0;
  if (stats.C6 == 0.0) {
    throw MtaError(ErrorCode::DegenerateDistance, "mean motif distance is zero");
  }
  return static_cast<double>(stats.C2) * stats.C3 / stats.C6;
}

double motif_efficiency(const RunStats& stats) {
  if (stats.C5 == 0.0) return 0.0;
  if (!(stats.C7 > 0.0)) throw MtaError(ErrorCode::ZeroRuntime, "execution time is zero");
  return stats.C5 / (stats.C7 / 1000.0);
}

double mean_pairwise_distance(const MemoryMotif& motif, const std::vector<double>& diff) {
  const auto& occ = motif.occurrences;
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (std::size_t j = i + 1; j < occ.size(); ++j) {
      if (occ[i] + motif.length > diff.size() || occ[j] + motif.length > diff.size()) {
        throw MtaError(ErrorCode::IndexOutOfRange, "motif occurrence exceeds series");
      }
      double ss = 0.0;
      for (std::size_t t = 0; t < motif.length; ++t) {
        const double d = diff[occ[i] + t] - diff[occ[j] + t];
        ss += d * d;
      }
      total += std::sqrt(ss);
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : total / static_cast<double>(pairs);
}

double coverage_percent(const MotifCatalog& catalog) {
  if (catalog.series_length == 0) return 0.0;
  std::vector<bool> flagged(catalog.series_length, false);
  for (const auto& m : catalog.motifs) {
    for (std::size_t p : m.occurrences) {
      const std::size_t end = std::min(p + m.length, catalog.series_length);
      for (std::size_t t = p; t < end; ++t) flagged[t] = true;
    }
  }
  const auto n = std::count(flagged.begin(), flagged.end(), true);
  return 100.0 * static_cast<double>(n) / static_cast<double>(catalog.series_length);
}

RunStats compute_stats(const MotifCatalog& catalog, const std::vector<double>& diff,
                       double elapsed_ms, std::optional<Interval> reference_window) {
  RunStats st;
  st.C1 = catalog.motifs.size();
  st.C7 = elapsed_ms;
  if (st.C1 > 0) {
    double len_sum = 0.0;
    double dist_sum = 0.0;
    for (const auto& m : catalog.motifs) {
      st.C2 += m.occurrences.size();
      len_sum += static_cast<double>(m.length);
      dist_sum += mean_pairwise_distance(m, diff);
    }
    const double n = static_cast<double>(st.C1);
    st.C3 = len_sum / n;
    double var = 0.0;
    for (const auto& m : catalog.motifs) {
      const double d = static_cast<double>(m.length) - st.C3;
      var += d * d;
    }
    st.C4 = std::sqrt(var / n);
    st.C6 = dist_sum / n;
  }
  st.C5 = coverage_percent(catalog);

  if (reference_window) {
    for (const auto& m : catalog.motifs) {
      const bool touches = std::any_of(m.occurrences.begin(), m.occurrences.end(),
                                       [&](std::size_t p) {
                                         return p < reference_window->end &&
                                                reference_window->begin < p + m.length;
                                       });
      if (touches) st.C8 = std::max(st.C8, m.length);
    }
  }

  st.MQ = st.C6 > 0.0 ? motif_quality(st) : 0.0;
  st.ME = st.C7 > 0.0 ? motif_efficiency(st) : 0.0;
  return st;
}

RunStats compute_stats(const RunResult& result, std::optional<Interval> reference_window) {
  return compute_stats(result.catalog, result.series.diff, result.elapsed_ms, reference_window);
}

std::vector<SweepRow> sweep(const TimeSeries& series, const std::vector<MtaConfig>& grid,
                            std::optional<Interval> reference_window, unsigned max_threads) {
  std::vector<SweepRow> rows(grid.size());
  if (grid.empty()) return rows;

  unsigned workers = max_threads ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      rows[i].config = grid[i];
      try {
        rows[i].stats = compute_stats(run(series, grid[i]), reference_window);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  return rows;
}

}  // namespace mta
