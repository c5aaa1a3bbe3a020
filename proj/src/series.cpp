#include "mta/series.hpp"

#include <cmath>
#include <numeric>

#include "mta/error.hpp"

namespace mta {

TimeSeries::TimeSeries(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw MtaError(ErrorCode::NonFiniteValue,
                     "non-finite value at index " + std::to_string(i));
    }
  }
}

std::vector<double> difference(const TimeSeries& series) {
  const auto v = series.values();
  if (v.size() < 2) {
    throw MtaError(ErrorCode::SeriesTooShort,
                   "differencing needs at least 2 values, got " +
                       std::to_string(v.size()));
  }
  std::vector<double> out(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out[i] = v[i + 1] - v[i];
  return out;
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double population_stddev(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size()));
}

std::vector<double> z_normalize(std::span<const double> x) {
  if (x.size() < 2) {
    throw MtaError(ErrorCode::SeriesTooShort, "z-normalization needs at least 2 values");
  }
  const double mu = mean(x);
  const double sd = population_stddev(x);
  // Anything this small relative to the mean is round-off on a constant input.
  if (!(sd > 1e-12 * std::max(1.0, std::abs(mu)))) {
    throw MtaError(ErrorCode::ZeroVariance, "series has zero variance");
  }
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mu) / sd;
  return out;
}

PreprocessedSeries preprocess(const TimeSeries& series) {
  PreprocessedSeries out;
  out.raw = series;
  out.diff = difference(series);
  out.norm = z_normalize(out.diff);
  out.sigma_diff = population_stddev(out.diff);
  return out;
}

}  // namespace mta
