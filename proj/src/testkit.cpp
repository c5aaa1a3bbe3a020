#include "mta/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mta/error.hpp"

namespace mta::testkit {

namespace {

// Increments are snapped to multiples of 2^-20 so that cumulative sums, and
// the differences taken back from them, are exact in double precision. This
// keeps planted copies bit-identical after a round trip through the walk.
double snap(double x) { return std::ldexp(std::round(std::ldexp(x, 20)), -20); }

}  // namespace

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::vector<OccurrencePair> brute_force_pairs(const PreprocessedSeries& pre, std::size_t L,
                                              std::size_t s, const MatchThreshold& thr) {
  if (s == 0 || L == 0 || L % s != 0) {
    throw MtaError(ErrorCode::LengthNotMultiple, "L must be a positive multiple of s");
  }
  const auto& x = pre.diff;
  if (L > x.size()) throw MtaError(ErrorCode::OutOfBounds, "L exceeds the differenced series");

  const std::size_t windows = x.size() - L + 1;
  const double r = thr.r();
  std::vector<OccurrencePair> out;
  for (std::size_t i = 0; i < windows; ++i) {
    for (std::size_t j = i + L; j < windows; ++j) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < L; k += s) {
        double ss = 0.0;
        for (std::size_t t = k; t < k + s; ++t) ss += (x[i + t] - x[j + t]) * (x[i + t] - x[j + t]);
        ok = std::sqrt(ss) <= r;
      }
      if (ok) out.emplace_back(i, j);
    }
  }
  return out;
}

TimeSeries random_walk(std::size_t length, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> v(length);
  double level = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    v[i] = level;
    level += snap(rng.normal());
  }
  return TimeSeries(std::move(v), "random_walk");
}

TimeSeries embed_motifs(const TimeSeries& series, const std::vector<PlantedMotifSpec>& specs) {
  if (specs.empty()) return series;
  std::vector<double> inc = difference(series);

  std::vector<std::pair<std::size_t, std::size_t>> placed;
  for (const auto& spec : specs) {
    const std::size_t L = spec.length();
    if (L == 0) throw MtaError(ErrorCode::OutOfBounds, "empty motif pattern");
    for (std::size_t p : spec.positions) {
      if (p + L > inc.size()) {
        throw MtaError(ErrorCode::OutOfBounds, "plant at " + std::to_string(p) + " of length " +
                                                   std::to_string(L) + " does not fit");
      }
      placed.emplace_back(p, p + L);
    }
  }
  std::sort(placed.begin(), placed.end());
  for (std::size_t i = 1; i < placed.size(); ++i) {
    if (placed[i].first < placed[i - 1].second) {
      throw MtaError(ErrorCode::OverlapError, "planted motifs overlap at " +
                                                  std::to_string(placed[i].first));
    }
  }

  for (const auto& spec : specs) {
    for (std::size_t p : spec.positions) {
      std::copy(spec.pattern.begin(), spec.pattern.end(), inc.begin() + static_cast<std::ptrdiff_t>(p));
    }
  }
  std::vector<double> out(series.size());
  out[0] = series[0];
  for (std::size_t i = 0; i < inc.size(); ++i) out[i + 1] = out[i] + inc[i];
  return TimeSeries(std::move(out), series.label());
}

std::vector<double> random_pattern(std::size_t length, double step_sigma, SplitMix64& rng) {
  std::vector<double> p(length);
  const double bound = 2.0 * step_sigma;
  for (auto& v : p) v = snap(std::clamp(step_sigma * rng.normal(), -bound, bound));
  return p;
}

Benchmark make_benchmark(std::size_t length, std::uint64_t seed,
                         const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& plants) {
  TimeSeries walk = random_walk(length, seed);
  // Independent stream for the patterns so the host walk does not depend on
  // how many plants are requested.
  SplitMix64 rng(seed ^ 0x5851f42d4c957f2dULL);
  Benchmark b;
  for (const auto& [len, positions] : plants) {
    b.truth.push_back(PlantedMotifSpec{random_pattern(len, 1.0, rng), positions});
  }
  b.series = embed_motifs(walk, b.truth);
  return b;
}

Benchmark make_benchmark_61(std::uint64_t seed) {
  return make_benchmark(400, seed, {{40, {47, 160}}, {40, {100, 230}}});
}

}  // namespace mta::testkit
