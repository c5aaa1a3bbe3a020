#include "mta/motif_store.hpp"

#include <algorithm>
#include <optional>
#include <cmath>
#include <tuple>

#include "mta/error.hpp"

namespace mta {

MatchThreshold::MatchThreshold(double per_point, std::size_t s)
    : per_point_(per_point), r_(per_point * static_cast<double>(s)) {
  if (!(per_point >= 0.0) || !std::isfinite(per_point)) {
    throw MtaError(ErrorCode::NegativeThreshold, "per-point threshold must be finite and >= 0");
  }
  if (s == 0) throw MtaError(ErrorCode::ConfigInvalid, "symbol length must be >= 1");
}

MatchThreshold make_threshold(double per_point, std::size_t s) {
  return MatchThreshold(per_point, s);
}

SubsetCheck check_subsets(std::size_t x_start, std::size_t y_start,
                          std::span<const double> diff, std::size_t g, std::size_t s,
                          const MatchThreshold& thr) {
  const std::size_t len = g * s;
  if (x_start + len > diff.size() || y_start + len > diff.size()) {
    throw MtaError(ErrorCode::IndexOutOfRange, "subset comparison window exceeds series");
  }
  const double r2 = thr.r() * thr.r();
  SubsetCheck out{true, 0.0};
  for (std::size_t k = 0; k < g; ++k) {
    const double* x = diff.data() + x_start + k * s;
    const double* y = diff.data() + y_start + k * s;
    double ss = 0.0;
    for (std::size_t t = 0; t < s; ++t) {
      const double d = x[t] - y[t];
      ss += d * d;
    }
    out.max_distance = std::max(out.max_distance, std::sqrt(ss));
    if (ss > r2) {
      out.ok = false;
      return out;
    }
  }
  return out;
}

bool subset_distance_ok(std::size_t x_start, std::size_t y_start,
                        std::span<const double> diff, std::size_t g, std::size_t s,
                        const MatchThreshold& thr) {
  return check_subsets(x_start, y_start, diff, g, s, thr).ok;
}

Confirmation confirm_motifs(const Tracker& tracker, std::span<const Word> matching_words,
                            const PreprocessedSeries& pre, std::size_t s,
                            const MatchThreshold& thr) {
  const std::size_t g = tracker.symbols.size();
  const std::size_t len = g * s;
  Confirmation out;
  std::vector<bool> claimed(matching_words.size(), false);

  for (std::size_t p = 0; p < matching_words.size(); ++p) {
    if (claimed[p] || matching_words[p].symbols != tracker.symbols) continue;
    std::vector<std::size_t> members{p};
    double max_dist = 0.0;
    for (std::size_t q = p + 1; q < matching_words.size(); ++q) {
      if (claimed[q] || matching_words[q].symbols != tracker.symbols) continue;
      const std::size_t ys = matching_words[q].start;
      bool fits = true;
      double worst = 0.0;
      for (std::size_t m : members) {
        const std::size_t xs = matching_words[m].start;
        if ((xs > ys ? xs - ys : ys - xs) < len) {
          fits = false;
          break;
        }
        const SubsetCheck c = check_subsets(xs, ys, pre.diff, g, s, thr);
        if (!c.ok) {
          fits = false;
          break;
        }
        worst = std::max(worst, c.max_distance);
      }
      if (!fits) continue;
      members.push_back(q);
      max_dist = std::max(max_dist, worst);
      ++out.stimulation;
    }
    if (members.size() < 2) continue;

    MemoryMotif motif;
    motif.symbols = tracker.symbols;
    motif.length = len;
    motif.max_subset_distance = max_dist;
    for (std::size_t m : members) {
      claimed[m] = true;
      motif.occurrences.push_back(matching_words[m].start);
    }
    std::sort(motif.occurrences.begin(), motif.occurrences.end());
    out.motifs.push_back(std::move(motif));
  }
  return out;
}

std::size_t confirm_motifs(const Tracker& tracker, const StageMatrix& stage,
                           const PreprocessedSeries& pre, std::size_t s,
                           const MatchThreshold& thr, MotifCatalog& catalog) {
  if (tracker.symbols.size() != stage.generation) {
    throw MtaError(ErrorCode::GenerationMismatch, "tracker length differs from stage generation");
  }
  std::vector<Word> matching;
  for (const auto& w : stage.words) {
    if (w.symbols == tracker.symbols) matching.push_back(w);
  }
  Confirmation c = confirm_motifs(tracker, matching, pre, s, thr);
  for (auto& m : c.motifs) store(catalog, std::move(m));
  return c.stimulation;
}

bool store(MotifCatalog& catalog, MemoryMotif motif) {
  const bool dup = std::any_of(catalog.motifs.begin(), catalog.motifs.end(),
                               [&](const MemoryMotif& m) {
                                 return m.symbols == motif.symbols &&
                                        m.occurrences == motif.occurrences;
                               });
  if (dup) return false;
  catalog.motifs.push_back(std::move(motif));
  return true;
}

namespace {

bool encapsulates(const MemoryMotif& outer, const MemoryMotif& inner) {
  if (outer.length <= inner.length) return false;
  if (inner.occurrences.size() > outer.occurrences.size()) return false;
  // The inner motif must sit at the same position inside every occurrence of
  // the outer one it falls in; a shifted copy is a different alignment, not a
  // sub-pattern.
  std::optional<std::size_t> shift;
  return std::all_of(inner.occurrences.begin(), inner.occurrences.end(), [&](std::size_t p) {
    return std::any_of(outer.occurrences.begin(), outer.occurrences.end(), [&](std::size_t q) {
      if (q > p || p + inner.length > q + outer.length) return false;
      if (shift && *shift != p - q) return false;
      shift = p - q;
      return true;
    });
  });
}

// Removes every motif encapsulated by some other motif. Encapsulation is
// transitive and strictly length-increasing, so testing against the
// original set is equivalent to removing one at a time.
bool remove_encapsulated(std::vector<MemoryMotif>& motifs) {
  std::vector<bool> drop(motifs.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    for (std::size_t j = 0; j < motifs.size(); ++j) {
      if (i != j && encapsulates(motifs[j], motifs[i])) {
        drop[i] = true;
        any = true;
        break;
      }
    }
  }
  if (!any) return false;
  std::vector<MemoryMotif> kept;
  kept.reserve(motifs.size());
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(motifs[i]));
  }
  motifs = std::move(kept);
  return true;
}

std::size_t symbol_length_of(const MemoryMotif& m) {
  if (m.symbols.empty() || m.length % m.symbols.size() != 0) return 0;
  return m.length / m.symbols.size();
}

// Merges b into a when both have the same occurrence count, every aligned
// pair of starts differs by the same offset, and the shared span is at least
// half of the shorter motif. The merged occurrences must stay non-overlapping.
bool try_merge(const MemoryMotif& a_in, const MemoryMotif& b_in, MemoryMotif& out) {
  if (a_in.occurrences.size() != b_in.occurrences.size() || a_in.occurrences.empty()) {
    return false;
  }
  const bool a_first = a_in.occurrences.front() <= b_in.occurrences.front();
  const MemoryMotif& a = a_first ? a_in : b_in;
  const MemoryMotif& b = a_first ? b_in : a_in;

  const std::size_t offset = b.occurrences.front() - a.occurrences.front();
  for (std::size_t i = 0; i < a.occurrences.size(); ++i) {
    if (b.occurrences[i] < a.occurrences[i] || b.occurrences[i] - a.occurrences[i] != offset) {
      return false;
    }
  }
  const std::size_t shorter = std::min(a.length, b.length);
  const std::size_t overlap =
      offset >= a.length ? 0 : std::min(a.length - offset, b.length);
  if (2 * overlap < shorter) return false;

  const std::size_t merged_len = std::max(a.length, offset + b.length);
  for (std::size_t i = 1; i < a.occurrences.size(); ++i) {
    if (a.occurrences[i] - a.occurrences[i - 1] < merged_len) return false;
  }

  out = MemoryMotif{};
  out.length = merged_len;
  out.occurrences = a.occurrences;
  out.max_subset_distance = std::max(a.max_subset_distance, b.max_subset_distance);
  out.symbols = a.symbols;
  // Splice b's trailing symbols on when both motifs sit on the same symbol grid.
  const std::size_t s = symbol_length_of(a);
  if (s != 0 && s == symbol_length_of(b) && offset % s == 0 && offset + b.length > a.length) {
    const std::size_t skip = (a.length - offset) / s;
    out.symbols += b.symbols.substr(skip);
  }
  return true;
}

bool merge_fragments(std::vector<MemoryMotif>& motifs) {
  bool any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < motifs.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < motifs.size(); ++j) {
        MemoryMotif merged;
        if (try_merge(motifs[i], motifs[j], merged)) {
          motifs[i] = std::move(merged);
          motifs.erase(motifs.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          any = true;
          break;
        }
      }
    }
  }
  return any;
}

}  // namespace

MotifCatalog streamline(MotifCatalog catalog) {
  auto& motifs = catalog.motifs;
  // Process in a canonical order so the result does not depend on the order
  // motifs were discovered in.
  std::stable_sort(motifs.begin(), motifs.end(), [](const MemoryMotif& x, const MemoryMotif& y) {
    return std::tie(x.occurrences, x.length, x.symbols) <
           std::tie(y.occurrences, y.length, y.symbols);
  });
  bool changed = true;
  while (changed) {
    const bool removed = remove_encapsulated(motifs);
    const bool merged = merge_fragments(motifs);
    changed = removed || merged;
  }
  // Merges can produce identical occurrence sets from different fragments.
  std::vector<MemoryMotif> unique;
  unique.reserve(motifs.size());
  for (auto& m : motifs) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const MemoryMotif& u) {
      return u.length == m.length && u.occurrences == m.occurrences;
    });
    if (!dup) unique.push_back(std::move(m));
  }
  motifs = std::move(unique);
  return catalog;
}

}  // namespace mta
