#include "mta/sax.hpp"

#include <algorithm>
#include <cmath>

#include "mta/error.hpp"

namespace mta {

namespace {

// Acklam's coefficients for the central and tail regions.
constexpr double kA[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                         -2.759285104469687e+02, 1.383577518672690e+02,
                         -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                         -1.556989798598866e+02, 6.680131188771972e+01,
                         -1.328068155288572e+01};
constexpr double kC[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                         -2.400758277161838e+00, -2.549732539343734e+00,
                         4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[] = {7.784695709041462e-03, 3.224671290700398e-01,
                         2.445134137142996e+00, 3.754408661907416e+00};

constexpr double kLow = 0.02425;
constexpr double kHigh = 1.0 - kLow;

double tail(double q) {
  return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
         ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
}

}  // namespace

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw MtaError(ErrorCode::IndexOutOfRange, "inverse_normal_cdf needs p in (0, 1)");
  }
  if (p < kLow) return tail(std::sqrt(-2.0 * std::log(p)));
  if (p > kHigh) return -tail(std::sqrt(-2.0 * std::log1p(-p)));
  const double q = p - 0.5;
  const double r = q * q;
  return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
         (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

std::vector<double> gaussian_breakpoints(int a) {
  if (a < 2 || a > kMaxAlphabet) {
    throw MtaError(ErrorCode::AlphabetOutOfRange,
                   "alphabet size must be in [2, 26], got " + std::to_string(a));
  }
  std::vector<double> out(static_cast<std::size_t>(a - 1));
  for (int k = 1; k < a; ++k) {
    out[static_cast<std::size_t>(k - 1)] = inverse_normal_cdf(static_cast<double>(k) / a);
  }
  // Force exact symmetry; the approximation is only symmetric to ~1e-9.
  for (std::size_t i = 0, j = out.size() - 1; i < j; ++i, --j) {
    const double m = 0.5 * (out[j] - out[i]);
    out[i] = -m;
    out[j] = m;
  }
  if (out.size() % 2 == 1) out[out.size() / 2] = 0.0;
  return out;
}

Alphabet::Alphabet(int size) : size_(size), breakpoints_(gaussian_breakpoints(size)) {}

int Alphabet::region(double value) const noexcept {
  // upper_bound: first breakpoint > value, so ties land in the higher region.
  return static_cast<int>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), value) -
                          breakpoints_.begin());
}

double window_mean(std::span<const double> norm, std::size_t start, std::size_t s) {
  if (s == 0 || start + s > norm.size()) {
    throw MtaError(ErrorCode::IndexOutOfRange, "window [" + std::to_string(start) + ", " +
                                                   std::to_string(start + s) +
                                                   ") outside series of length " +
                                                   std::to_string(norm.size()));
  }
  double sum = 0.0;
  for (std::size_t i = start; i < start + s; ++i) sum += norm[i];
  return sum / static_cast<double>(s);
}

char symbolize(double mean, const Alphabet& alphabet) {
  return alphabet.symbol(alphabet.region(mean));
}

SymbolMatrix build_symbol_matrix(const PreprocessedSeries& pre, std::size_t s,
                                 const Alphabet& alphabet) {
  const std::span<const double> norm = pre.norm;
  if (s == 0 || norm.size() < s) {
    throw MtaError(ErrorCode::SeriesTooShort,
                   "normalized series of length " + std::to_string(norm.size()) +
                       " cannot hold a window of " + std::to_string(s));
  }
  SymbolMatrix matrix;
  matrix.symbol_length = s;
  const std::size_t count = norm.size() - s + 1;
  matrix.entries.reserve(count);

  for (std::size_t i = 0; i < count; ++i) {
    matrix.entries.push_back(
        Word{std::string(1, symbolize(window_mean(norm, i, s), alphabet)), i, s});
  }
  return matrix;
}

}  // namespace mta
