#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mta/sax.hpp"
#include "mta/stage.hpp"

namespace mta {

/// Candidate motif signature.
struct Tracker {
  std::string symbols;
  std::size_t match_count = 0;

  friend bool operator==(const Tracker&, const Tracker&) = default;
};

/// Trackers of one generation. Kept sorted by symbol string, which makes
/// uniqueness checkable and iteration order deterministic.
class TrackerPopulation {
 public:
  TrackerPopulation() = default;
  TrackerPopulation(std::vector<Tracker> trackers, std::size_t generation);

  const std::vector<Tracker>& trackers() const noexcept { return trackers_; }
  std::vector<Tracker>& trackers() noexcept { return trackers_; }
  std::size_t generation() const noexcept { return generation_; }
  std::size_t size() const noexcept { return trackers_.size(); }
  bool empty() const noexcept { return trackers_.empty(); }

  const Tracker* find(const std::string& symbols) const;

 private:
  std::vector<Tracker> trackers_;
  std::size_t generation_ = 0;
};

/// Generation-1 survivors; the only symbols used to extend trackers.
class MutationTemplate {
 public:
  /// Throws TemplateAlreadyCaptured on a second call.
  void capture(const TrackerPopulation& survivors);

  bool captured() const noexcept { return captured_; }
  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

 private:
  std::string symbols_;
  bool captured_ = false;
};

TrackerPopulation init_population(const Alphabet& alphabet);

TrackerPopulation match_trackers(TrackerPopulation pop, const StageMatrix& stage);

TrackerPopulation eliminate_unstimulated(TrackerPopulation pop, std::size_t min_count);

MutationTemplate capture_mutation_template(const TrackerPopulation& pop);

/// Each survivor spawns |template| clones, each extended on the right by one
/// template symbol. Parents are retired.
TrackerPopulation proliferate_and_mutate(const TrackerPopulation& pop,
                                         const MutationTemplate& tmpl);

}  // namespace mta
