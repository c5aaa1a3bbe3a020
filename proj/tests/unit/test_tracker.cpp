#include <gtest/gtest.h>

#include <set>

#include "mta/tracker.hpp"
#include "test_util.hpp"

using namespace mta;
using mta::test::error_code_of;

namespace {

StageMatrix stage_of(const std::vector<std::string>& words) {
  StageMatrix st;
  st.generation = words.empty() ? 1 : words.front().size();
  for (std::size_t i = 0; i < words.size(); ++i) st.words.push_back(Word{words[i], i * 10, 10});
  return st;
}

std::vector<std::string> symbols_of(const TrackerPopulation& pop) {
  std::vector<std::string> out;
  for (const auto& t : pop.trackers()) out.push_back(t.symbols);
  return out;
}

TrackerPopulation population(std::vector<std::pair<std::string, std::size_t>> spec) {
  std::vector<Tracker> ts;
  for (auto& [sym, count] : spec) ts.push_back(Tracker{sym, count});
  const std::size_t g = ts.empty() ? 1 : ts.front().symbols.size();
  return TrackerPopulation(std::move(ts), g);
}

}  // namespace

TEST(InitPopulation, OneTrackerPerSymbol) {
  const auto pop = init_population(Alphabet(3));
  EXPECT_EQ(symbols_of(pop), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(pop.generation(), 1u);
  for (const auto& t : pop.trackers()) EXPECT_EQ(t.match_count, 0u);
  EXPECT_EQ(init_population(Alphabet(2)).size(), 2u);
  EXPECT_EQ(init_population(Alphabet(6)).size(), 6u);
}

TEST(MatchTrackers, CountsExactMatches) {
  const auto pop = match_trackers(init_population(Alphabet(3)), stage_of({"a", "a", "b", "b", "a", "b"}));
  EXPECT_EQ(pop.find("a")->match_count, 3u);
  EXPECT_EQ(pop.find("b")->match_count, 3u);
  EXPECT_EQ(pop.find("c")->match_count, 0u);
}

TEST(MatchTrackers, EmptyStageAndSingleSymbol) {
  auto pop = match_trackers(init_population(Alphabet(3)), stage_of({}));
  for (const auto& t : pop.trackers()) EXPECT_EQ(t.match_count, 0u);
  pop = match_trackers(init_population(Alphabet(3)), stage_of({"c", "c"}));
  EXPECT_EQ(pop.find("c")->match_count, 2u);
  EXPECT_EQ(pop.find("a")->match_count, 0u);
}

TEST(MatchTrackers, GenerationMismatch) {
  EXPECT_EQ(error_code_of([] { match_trackers(init_population(Alphabet(3)), stage_of({"ab", "ab"})); }),
            ErrorCode::GenerationMismatch);
}

TEST(EliminateUnstimulated, Thresholds) {
  auto pop = eliminate_unstimulated(population({{"a", 3}, {"b", 3}, {"c", 0}}), 2);
  EXPECT_EQ(symbols_of(pop), (std::vector<std::string>{"a", "b"}));
  for (const auto& t : pop.trackers()) EXPECT_EQ(t.match_count, 0u);
  EXPECT_TRUE(eliminate_unstimulated(population({{"a", 1}}), 2).empty());
  EXPECT_TRUE(eliminate_unstimulated(population({{"a", 0}}), 1).empty());
}

TEST(MutationTemplate, CapturesSurvivorsInAlphabetOrder) {
  EXPECT_EQ(capture_mutation_template(population({{"b", 0}, {"a", 0}})).symbols(), "ab");
  EXPECT_EQ(capture_mutation_template(population({{"d", 0}, {"a", 0}, {"c", 0}})).symbols(), "acd");
  const auto empty = capture_mutation_template(TrackerPopulation({}, 1));
  EXPECT_TRUE(empty.empty());
  EXPECT_TRUE(empty.captured());
}

TEST(MutationTemplate, SecondCaptureFails) {
  MutationTemplate tmpl;
  tmpl.capture(population({{"a", 0}}));
  EXPECT_EQ(error_code_of([&] { tmpl.capture(population({{"b", 0}})); }),
            ErrorCode::TemplateAlreadyCaptured);
}

TEST(ProliferateAndMutate, FigureTwoExample) {
  const auto pop = population({{"a", 0}, {"c", 0}, {"d", 0}});
  const auto next = proliferate_and_mutate(pop, capture_mutation_template(pop));
  EXPECT_EQ(symbols_of(next),
            (std::vector<std::string>{"aa", "ac", "ad", "ca", "cc", "cd", "da", "dc", "dd"}));
  EXPECT_EQ(next.generation(), 2u);
}

TEST(ProliferateAndMutate, SmallCases) {
  const auto one = population({{"a", 0}});
  EXPECT_EQ(symbols_of(proliferate_and_mutate(one, capture_mutation_template(one))),
            std::vector<std::string>{"aa"});
  const auto two = population({{"a", 0}, {"b", 0}});
  EXPECT_EQ(proliferate_and_mutate(two, capture_mutation_template(two)).size(), 4u);
}

TEST(ProliferateAndMutate, SizeUniquenessAndCoverage) {
  MutationTemplate tmpl;
  tmpl.capture(population({{"a", 0}, {"c", 0}, {"e", 0}, {"f", 0}}));
  auto pop = population({{"a", 0}, {"c", 0}, {"e", 0}, {"f", 0}});
  for (int round = 0; round < 3; ++round) {
    // Keep a deterministic subset of survivors to vary the parent set.
    std::vector<Tracker> keep;
    for (std::size_t i = 0; i < pop.size(); i += 2) keep.push_back(pop.trackers()[i]);
    const TrackerPopulation parents(keep, pop.generation());
    const auto next = proliferate_and_mutate(parents, tmpl);
    EXPECT_EQ(next.size(), parents.size() * tmpl.size());
    const auto names = symbols_of(next);
    const std::set<std::string> got(names.begin(), names.end());
    EXPECT_EQ(got.size(), next.size());
    for (const auto& p : parents.trackers()) {
      for (char c : tmpl.symbols()) EXPECT_TRUE(got.count(p.symbols + c)) << p.symbols + c;
    }
    for (const auto& t : next.trackers()) EXPECT_EQ(t.symbols.size(), parents.generation() + 1);
    pop = next;
  }
}

TEST(TrackerPopulation, RejectsDuplicatesAndMixedLengths) {
  EXPECT_EQ(error_code_of([] { population({{"a", 0}, {"a", 0}}); }), ErrorCode::ConfigInvalid);
  EXPECT_EQ(error_code_of([] { population({{"a", 0}, {"ab", 0}}); }), ErrorCode::GenerationMismatch);
}
