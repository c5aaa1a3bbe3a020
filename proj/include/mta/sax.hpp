#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mta/series.hpp"

namespace mta {

inline constexpr int kMaxAlphabet = 26;

/// Inverse of the standard normal CDF. Rational approximation with
/// relative error below 1.2e-9 over (0, 1).
double inverse_normal_cdf(double p);

/// Standard-normal quantiles at k/a for k = 1..a-1.
std::vector<double> gaussian_breakpoints(int a);

/// Symbol set of size a over 'a'..'z' with equiprobable Gaussian regions.
class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  char symbol(int k) const { return static_cast<char>('a' + k); }
  bool contains(char c) const noexcept { return c >= 'a' && c < 'a' + size_; }

  /// Index of the region containing `value`: the number of breakpoints
  /// strictly below it. A value equal to a breakpoint takes the higher symbol.
  int region(double value) const noexcept;

 private:
  int size_;
  std::vector<double> breakpoints_;
};

/// A symbol string anchored at a start index on the differenced axis.
struct Word {
  std::string symbols;
  std::size_t start = 0;
  std::size_t covered_length = 0;

  friend bool operator==(const Word&, const Word&) = default;
};

/// One single-symbol word per length-s sliding window; entries[i].start == i.
struct SymbolMatrix {
  std::vector<Word> entries;
  std::size_t symbol_length = 0;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
};

double window_mean(std::span<const double> norm, std::size_t start, std::size_t s);

char symbolize(double mean, const Alphabet& alphabet);

SymbolMatrix build_symbol_matrix(const PreprocessedSeries& pre, std::size_t s,
                                 const Alphabet& alphabet);

}  // namespace mta
