#include <gtest/gtest.h>

#include "optiform/pgame.h"

namespace optiform {
namespace {

SemiringValue Q(std::int64_t n) { return SemiringValue::Number(n); }

// Both players want to match the other's choice (x) or mismatch it (y).
PpGame MatchingPennies() {
  PpGame g;
  g.players = {{"x", {"h", "t"}}, {"y", {"h", "t"}}};
  g.prefs = {{{1}, {StrictOrder({0, 1}), StrictOrder({1, 0})}},
             {{0}, {StrictOrder({1, 0}), StrictOrder({0, 1})}}};
  return g;
}

TEST(PpGame, SingleStrategyPlayers) {
  PpGame g;
  g.players = {{"x", {"only"}}, {"y", {"one"}}};
  g.prefs = {{{}, {StrictOrder({0})}}, {{}, {StrictOrder({0})}}};
  EXPECT_EQ(BestResponse(g, 0, {}), 0);
  EXPECT_EQ(NashEquilibria(g), (std::vector<Assignment>{{0, 0}}));
}

TEST(PpGame, MatchingPenniesIsNotHierarchical) {
  PpGame g = MatchingPennies();
  EXPECT_TRUE(NashEquilibria(g).empty());
  Hierarchy h = AnalyzeHierarchy(g);
  EXPECT_FALSE(h.hierarchical);
  EXPECT_TRUE(h.levels.empty());
  EXPECT_EQ(h.dependencies, (std::vector<std::vector<int>>{{1}, {0}}));
}

TEST(PpGame, ReduceWithoutCandidatesIsIdentity) {
  PpGame g = MatchingPennies();
  EXPECT_EQ(ReducePp(g, EliminationMode::kNeverBestResponse), g);
  EXPECT_EQ(ReducePp(g, EliminationMode::kStrictlyDominated), g);
}

TEST(TechGame, IsolatedPlayerRanksByIndex) {
  Digraph graph{{"v"}, {}};
  PpGame g = TechGame(graph, 3);
  EXPECT_EQ(g.players[0].domain, (std::vector<std::string>{"t1", "t2", "t3"}));
  ASSERT_EQ(g.prefs[0].rows.size(), 1u);
  EXPECT_EQ(g.prefs[0].rows[0], StrictOrder({0, 1, 2}));
  EXPECT_TRUE(IsNeverBestResponse(g, 0, 1));
}

TEST(TechGame, MajorityOfNeighboursWins) {
  Digraph graph{{"a", "b", "c", "v"}, {{0, 3}, {1, 3}, {2, 3}}};
  PpGame g = TechGame(graph, 2);
  // Neighbours play t2, t2, t1.
  EXPECT_EQ(BestResponse(g, 3, std::vector<int>{1, 1, 0}), 1);
  EXPECT_EQ(RowFor(g.players, g.prefs[3], {1, 1, 0, 0}), StrictOrder({1, 0}));
}

TEST(TechGame, AcyclicGraphsSettleOnFirstTechnology) {
  Digraph graph{{"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}};
  for (int k = 1; k <= 3; ++k) {
    auto run = ReducePpFixpoint(TechGame(graph, k),
                                EliminationMode::kNeverBestResponse);
    for (const Variable& p : run.result.players) {
      EXPECT_EQ(p.domain, std::vector<std::string>{"t1"});
    }
  }
}

TEST(WellStructured, DagsAndCycles) {
  EXPECT_TRUE(WellStructuredLevels(Digraph{{"v"}, {}}).has_value());
  Digraph dag{{"a", "b", "c"}, {{0, 1}, {1, 2}}};
  auto levels = WellStructuredLevels(dag);
  ASSERT_TRUE(levels.has_value());
  EXPECT_TRUE(LevelsWellStructured(dag, *levels));
  Digraph two_cycle{{"a", "b"}, {{0, 1}, {1, 0}}};
  EXPECT_FALSE(WellStructuredLevels(two_cycle).has_value());
  EXPECT_FALSE(LevelsWellStructured(two_cycle, std::vector<int>{0, 1}));
}

TEST(WellStructured, CycleFedFromOutside) {
  // s feeds both nodes of a 2-cycle: each has one edge from below.
  Digraph g{{"s", "a", "b"}, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}};
  auto levels = WellStructuredLevels(g);
  ASSERT_TRUE(levels.has_value());
  EXPECT_TRUE(LevelsWellStructured(g, *levels));
}

PayoffGame Coordination() {
  PayoffGame g;
  g.players = {{"x", {"a", "b"}}, {"y", {"a", "b"}}};
  g.neighbours = {{1}, {0}};
  g.payoffs = {{Q(2), Q(0), Q(0), Q(1)}, {Q(2), Q(0), Q(0), Q(1)}};
  return g;
}

TEST(PayoffGame, CoordinationEquilibria) {
  PayoffGame g = Coordination();
  EXPECT_EQ(NashEquilibria(g), (std::vector<Assignment>{{0, 0}, {1, 1}}));
  EXPECT_EQ(ParetoEfficient(g), (std::vector<Assignment>{{0, 0}}));
  EXPECT_TRUE(ParetoLess(g, {1, 1}, {0, 0}));
  EXPECT_EQ(BestResponses(g, 0, {0, 1}), std::vector<int>{1});
}

TEST(PayoffGame, ConstantPayoffsMakeEverythingStable) {
  PayoffGame g = Coordination();
  for (auto& table : g.payoffs) table.assign(4, Q(5));
  EXPECT_EQ(NashEquilibria(g).size(), 4u);
  EXPECT_EQ(ParetoEfficient(g).size(), 4u);
}

TEST(PayoffGame, WeightedCarrierRanksCosts) {
  PayoffGame g = Coordination();
  g.carrier = SemiringSpec::Weighted();
  // Costs now: aa is the worst outcome for both.
  EXPECT_EQ(ParetoEfficient(g), (std::vector<Assignment>{{0, 1}, {1, 0}}));
}

TEST(PayoffGame, ValidationRejectsProductsAndShortTables) {
  PayoffGame g = Coordination();
  g.payoffs[0].pop_back();
  EXPECT_THROW(Validate(g), ValidationError);
  g = Coordination();
  g.carrier = SemiringSpec::Product(
      {SemiringSpec::Weighted(), SemiringSpec::Weighted()});
  EXPECT_THROW(Validate(g), ValidationError);
  g = Coordination();
  g.carrier = SemiringSpec::Fuzzy();
  EXPECT_THROW(Validate(g), CarrierError);
}

}  // namespace
}  // namespace optiform
