#include <gtest/gtest.h>

#include "optiform/cpnet.h"

namespace optiform {
namespace {

// X with no parents, Y | X with the given orders.
CpNet Chain(std::vector<int> y_when_x0, std::vector<int> y_when_x1) {
  CpNet net;
  net.variables = {{"X", {"x0", "x1"}}, {"Y", {"y0", "y1"}}};
  net.tables = {{{}, {StrictOrder({0, 1})}},
                {{0}, {StrictOrder(std::move(y_when_x0)),
                       StrictOrder(std::move(y_when_x1))}}};
  return net;
}

TEST(StrictOrder, RejectsNonPermutations) {
  EXPECT_THROW(StrictOrder({0, 0}), ValidationError);
  EXPECT_THROW(StrictOrder({0, 2}), ValidationError);
  StrictOrder o({2, 0, 1});
  EXPECT_EQ(o.top(), 2);
  EXPECT_TRUE(o.Prefers(0, 1));
  EXPECT_EQ(o.Restrict(std::vector<int>{0, -1, 1}), StrictOrder({1, 0}));
}

TEST(CpNet, ValidationChecksRows) {
  CpNet net = Chain({0, 1}, {1, 0});
  EXPECT_NO_THROW(Validate(net));
  net.tables[1].rows.pop_back();
  EXPECT_THROW(Validate(net), ValidationError);
  net = Chain({0, 1}, {1, 0});
  net.tables[1].conditions = {1};
  EXPECT_THROW(Validate(net), ValidationError);
}

TEST(CpNet, SweepOfSingleVariable) {
  CpNet net;
  net.variables = {{"X", {"x1", "x2"}}};
  net.tables = {{{}, {StrictOrder({1, 0})}}};
  EXPECT_EQ(SweepOptimal(net), Assignment{1});
}

TEST(CpNet, SweepRejectsCycles) {
  CpNet net;
  net.variables = {{"A", {"a", "b"}}, {"B", {"a", "b"}}};
  net.tables = {{{1}, {StrictOrder({0, 1}), StrictOrder({1, 0})}},
                {{0}, {StrictOrder({0, 1}), StrictOrder({1, 0})}}};
  EXPECT_FALSE(IsAcyclic(net));
  EXPECT_THROW(SweepOptimal(net), ValidationError);
}

TEST(CpNet, DominanceBudget) {
  CpNet net = Chain({0, 1}, {1, 0});
  EXPECT_EQ(Dominates(net, {0, 0}, {1, 0}, 0), Dominance::kBudgetExhausted);
  EXPECT_EQ(Dominates(net, {0, 0}, {1, 0}), Dominance::kDominates);
  EXPECT_EQ(Dominates(net, {1, 0}, {0, 0}), Dominance::kNotDominated);
}

TEST(CpNet, UniformRowsGiveUnconditionalConstraint) {
  CpNet net = Chain({1, 0}, {1, 0});
  SoftCsp opt = OptimalityConstraints(net);
  int on_y = 0;
  for (const SoftConstraint& c : opt.constraints) {
    if (c.scope.back() != 1) continue;
    ++on_y;
    // Only Y = y1 is allowed, whatever X is.
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        EXPECT_EQ(TableValue(opt, c, {x, y}), SemiringValue::Bool(y == 1));
      }
    }
  }
  EXPECT_EQ(on_y, 1);
}

TEST(CpNet, ReduceDropsRedundantParents) {
  CpNet net = Chain({1, 0}, {1, 0});
  EXPECT_EQ(RedundantParents(net, 1), std::vector<int>{0});
  CpNet r = Reduce(net);
  EXPECT_TRUE(r.parents(1).empty());
  EXPECT_TRUE(IsReduced(r));
  EXPECT_TRUE(IsReduced(Chain({0, 1}, {1, 0})));
}

TEST(CpNet, EliminationOnSingletonsIsEmpty) {
  CpNet net;
  net.variables = {{"X", {"x"}}};
  net.tables = {{{}, {StrictOrder({0})}}};
  EXPECT_EQ(NbrElements(net), ValueSets{{}});
  EXPECT_EQ(DominatedElements(net), ValueSets{{}});
  auto run = ReduceToFixpoint(net, EliminationMode::kNeverBestResponse);
  EXPECT_TRUE(run.steps.empty());
  EXPECT_EQ(run.result, net);
}

TEST(CpNet, EliminateRejectsEmptyDomains) {
  CpNet net = Chain({0, 1}, {1, 0});
  EXPECT_THROW(Eliminate(net, {{0, 1}, {}}), ValidationError);
  CpNet sub = Eliminate(net, {{1}, {}});
  EXPECT_EQ(sub.variables[0].domain, std::vector<std::string>{"x0"});
  EXPECT_EQ(sub.tables[1].rows.size(), 1u);
}

}  // namespace
}  // namespace optiform
