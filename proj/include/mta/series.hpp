#pragma once

#include <span>
#include <string>
#include <vector>

namespace mta {

/// A univariate, time-ordered series of finite real values.
///
/// Construction rejects NaN and infinite values so that window indices
/// never silently shift.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> values, std::string label = {});

  std::span<const double> values() const noexcept { return values_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
  std::string label_;
};

/// Raw series plus its first-order differences, the z-normalized
/// differences and the (population) standard deviation of the differences.
struct PreprocessedSeries {
  TimeSeries raw;
  std::vector<double> diff;
  std::vector<double> norm;
  double sigma_diff = 0.0;
};

std::vector<double> difference(const TimeSeries& series);

// Population standard deviation (divide by N).
double population_stddev(std::span<const double> x);
double mean(std::span<const double> x);

std::vector<double> z_normalize(std::span<const double> x);

PreprocessedSeries preprocess(const TimeSeries& series);

}  // namespace mta
