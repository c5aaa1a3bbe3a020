#include "mta/tracker.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "mta/error.hpp"

namespace mta {

TrackerPopulation::TrackerPopulation(std::vector<Tracker> trackers, std::size_t generation)
    : trackers_(std::move(trackers)), generation_(generation) {
  std::sort(trackers_.begin(), trackers_.end(),
            [](const Tracker& a, const Tracker& b) { return a.symbols < b.symbols; });
  const auto dup = std::adjacent_find(
      trackers_.begin(), trackers_.end(),
      [](const Tracker& a, const Tracker& b) { return a.symbols == b.symbols; });
  if (dup != trackers_.end()) {
    throw MtaError(ErrorCode::ConfigInvalid, "duplicate tracker '" + dup->symbols + "'");
  }
  for (const auto& t : trackers_) {
    if (t.symbols.empty() || t.symbols.size() != generation_) {
      throw MtaError(ErrorCode::GenerationMismatch,
                     "tracker '" + t.symbols + "' does not have length " +
                         std::to_string(generation_));
    }
  }
}

const Tracker* TrackerPopulation::find(const std::string& symbols) const {
  const auto it = std::lower_bound(
      trackers_.begin(), trackers_.end(), symbols,
      [](const Tracker& t, const std::string& s) { return t.symbols < s; });
  return it != trackers_.end() && it->symbols == symbols ? &*it : nullptr;
}

void MutationTemplate::capture(const TrackerPopulation& survivors) {
  if (captured_) {
    throw MtaError(ErrorCode::TemplateAlreadyCaptured, "mutation template already captured");
  }
  if (survivors.generation() != 1) {
    throw MtaError(ErrorCode::GenerationMismatch,
                   "mutation template must be captured from generation 1");
  }
  symbols_.clear();
  // Population is sorted, so this is alphabet order.
  for (const auto& t : survivors.trackers()) symbols_.push_back(t.symbols.front());
  captured_ = true;
}

TrackerPopulation init_population(const Alphabet& alphabet) {
  std::vector<Tracker> trackers;
  trackers.reserve(static_cast<std::size_t>(alphabet.size()));
  for (int k = 0; k < alphabet.size(); ++k) {
    trackers.push_back(Tracker{std::string(1, alphabet.symbol(k)), 0});
  }
  return TrackerPopulation(std::move(trackers), 1);
}

TrackerPopulation match_trackers(TrackerPopulation pop, const StageMatrix& stage) {
  if (!stage.words.empty() && pop.generation() != stage.generation) {
    throw MtaError(ErrorCode::GenerationMismatch,
                   "population generation " + std::to_string(pop.generation()) +
                       " vs stage generation " + std::to_string(stage.generation));
  }
  // One pass over the stage, then a lookup per tracker.
  std::unordered_map<std::string_view, std::size_t> counts;
  counts.reserve(stage.words.size());
  for (const auto& w : stage.words) ++counts[w.symbols];
  for (auto& t : pop.trackers()) {
    const auto it = counts.find(t.symbols);
    t.match_count = it == counts.end() ? 0 : it->second;
  }
  return pop;
}

TrackerPopulation eliminate_unstimulated(TrackerPopulation pop, std::size_t min_count) {
  auto& ts = pop.trackers();
  std::erase_if(ts, [min_count](const Tracker& t) { return t.match_count < min_count; });
  for (auto& t : ts) t.match_count = 0;
  return pop;
}

MutationTemplate capture_mutation_template(const TrackerPopulation& pop) {
  MutationTemplate tmpl;
  tmpl.capture(pop);
  return tmpl;
}

TrackerPopulation proliferate_and_mutate(const TrackerPopulation& pop,
                                         const MutationTemplate& tmpl) {
  std::vector<Tracker> next;
  next.reserve(pop.size() * tmpl.size());
  for (const auto& parent : pop.trackers()) {
    for (char c : tmpl.symbols()) next.push_back(Tracker{parent.symbols + c, 0});
  }
  return TrackerPopulation(std::move(next), pop.generation() + 1);
}

}  // namespace mta
