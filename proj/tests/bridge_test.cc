#include <gtest/gtest.h>

#include "optiform/bridge.h"

namespace optiform {
namespace {

SemiringValue Q(std::int64_t n, std::int64_t d = 1) {
  return SemiringValue::Number(n, d);
}

TEST(Bridge, IndependentNetGivesConstantGame) {
  CpNet net;
  net.variables = {{"A", {"a", "b"}}, {"B", {"a", "b"}}};
  net.tables = {{{}, {StrictOrder({1, 0})}}, {{}, {StrictOrder({0, 1})}}};
  PpGame game = GameOfCpnet(net);
  EXPECT_TRUE(game.neighbours(0).empty());
  EXPECT_TRUE(game.neighbours(1).empty());
  EXPECT_EQ(NashEquilibria(game), (std::vector<Assignment>{{1, 0}}));

  CpNet back = CpnetOfGame(game);
  EXPECT_EQ(back.parents(0), std::vector<int>{1});
  EXPECT_EQ(Reduce(back), net);
}

TEST(Bridge, UnaryProblemGivesSinglePlayer) {
  SoftCsp p{SemiringSpec::Fuzzy(), {{"x", {"a", "b", "c"}}},
            {{{0}, {Q(1, 2), Q(1), Q(0)}}}};
  PayoffGame g = LocalMap(p);
  ASSERT_EQ(g.players.size(), 1u);
  EXPECT_TRUE(g.neighbours[0].empty());
  EXPECT_EQ(g.payoffs[0], p.constraints[0].table);
  EXPECT_EQ(NashEquilibria(g), (std::vector<Assignment>{{1}}));
}

TEST(Bridge, LocalMapRejectsProducts) {
  auto ww = SemiringSpec::Product(
      {SemiringSpec::Weighted(), SemiringSpec::Weighted()});
  SoftCsp p{ww, {{"x", {"a"}}}, {}};
  EXPECT_THROW(LocalMap(p), ValidationError);
}

TEST(Bridge, GlobalMapPaysSolutionPreference) {
  SoftCsp p{SemiringSpec::Weighted(),
            {{"x", {"a", "b"}}, {"y", {"a", "b"}}},
            {{{0}, {Q(2), Q(1)}}, {{1}, {Q(4), Q(7)}}}};
  PayoffGame g = GlobalMap(p);
  EXPECT_EQ(g.neighbours, (std::vector<std::vector<int>>{{1}, {0}}));
  EXPECT_EQ(Payoff(g, 0, {1, 0}), Q(5));
  EXPECT_EQ(Payoff(g, 1, {1, 0}), Q(5));
}

PayoffGame Pd() {
  PayoffGame g;
  g.players = {{"x1", {"c", "n"}}, {"x2", {"c", "n"}}};
  g.neighbours = {{1}, {0}};
  g.payoffs = {{Q(3), Q(0), Q(4), Q(1)}, {Q(3), Q(4), Q(0), Q(1)}};
  return g;
}

TEST(Bridge, OrderPreservingMapOffsets) {
  PayoffGame g = Pd();
  auto f = MakeOrderPreservingMap(g, std::nullopt);
  EXPECT_EQ(f.offset, Rational(4));
  EXPECT_EQ(f.Apply(Q(1)), Q(3));
  EXPECT_THROW(MakeOrderPreservingMap(g, Rational(3)), ValidationError);

  g.carrier = SemiringSpec::Weighted();
  auto id = MakeOrderPreservingMap(g, std::nullopt);
  EXPECT_EQ(id.Apply(Q(3)), Q(3));
  EXPECT_THROW(MakeOrderPreservingMap(g, Rational(10)), ValidationError);
}

TEST(Bridge, OffsetDoesNotChangeResults) {
  PayoffGame g = Pd();
  auto nash4 = ParetoNash(g);
  auto nash10 = ParetoNash(g, Rational(10));
  ASSERT_EQ(nash4.size(), 1u);
  ASSERT_EQ(nash10.size(), 1u);
  EXPECT_EQ(nash4[0].assignment, nash10[0].assignment);
  EXPECT_EQ(nash4[0].preference,
            SemiringValue::Tuple({Q(3), Q(3)}));
}

TEST(Bridge, RegretConstraintsAllowBestResponses) {
  PayoffGame g = Pd();
  SoftCsp h = RegretConstraints(g);
  EXPECT_EQ(h.semiring, SemiringSpec::Boolean());
  EXPECT_EQ(PerfectSolutions(h), NashEquilibria(g));
  // Player 1's constraint: n is the best response to either move.
  const auto t = SemiringValue::Bool(true), f = SemiringValue::Bool(false);
  EXPECT_EQ(h.constraints[0].table, (std::vector<SemiringValue>{f, f, t, t}));
}

}  // namespace
}  // namespace optiform
