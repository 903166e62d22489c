// One test per fixture. Expected values are the published worked examples.

#include <gtest/gtest.h>

#include "optiform/bridge.h"
#include "optiform/cpnet.h"
#include "optiform/oracle.h"
#include "optiform/pgame.h"
#include "optiform/softcsp.h"
#include "support.h"

namespace optiform {
namespace {

using testing::Assignments;
using testing::Intersect;
using testing::Load;
using testing::Parse;
using testing::Word;
using testing::Words;
using Set = std::set<std::string>;

SemiringValue Q(std::int64_t n, std::int64_t d = 1) {
  return SemiringValue::Number(n, d);
}

SemiringValue Pair(std::int64_t a, std::int64_t b) {
  return SemiringValue::Tuple({Q(a), Q(b)});
}

TEST(Golden, FuzzyThreeVariables) {
  auto p = Load<SoftCsp>("fuzzy3.scsp");
  auto optimal = OptimalSolutions(p);
  ASSERT_EQ(optimal.size(), 1u);
  EXPECT_EQ(Word(p.variables, optimal[0].assignment), "bbb");
  EXPECT_EQ(optimal[0].preference, Q(1, 2));
  EXPECT_EQ(SolutionPreference(p, Parse(p.variables, "aaa")), Q(2, 5));

  PayoffGame game = LocalMap(p);
  EXPECT_EQ(game.neighbours, (std::vector<std::vector<int>>{{1}, {0, 2}, {1}}));
  EXPECT_EQ(Payoff(game, 0, Parse(p.variables, "aab")), Q(2, 5));
  auto nash = NashEquilibria(game);
  EXPECT_EQ(Words(p.variables, nash), (Set{"aaa", "bbb"}));
  EXPECT_EQ(nash, oracle::BruteNash(game));

  // aaa is an equilibrium that is not optimal.
  EXPECT_TRUE(std::find(nash.begin(), nash.end(),
                        Parse(p.variables, "aaa")) != nash.end());
  EXPECT_NE(Words(p.variables, Assignments(optimal)).count("aaa"), 1u);

  PayoffGame global = GlobalMap(p);
  EXPECT_EQ(Words(p.variables,
                  Intersect(NashEquilibria(global), ParetoEfficient(global))),
            Set{"bbb"});
}

TEST(Golden, FuzzySecondProblem) {
  auto p = Load<SoftCsp>("fuzzy3b.scsp");
  auto optimal = Assignments(OptimalSolutions(p));
  EXPECT_EQ(Words(p.variables, optimal),
            (Set{"aab", "abb", "bab", "bbb"}));
  EXPECT_EQ(optimal, Assignments(oracle::BruteOptimalSolutions(p)));
  for (const Solution& s : OptimalSolutions(p)) {
    EXPECT_EQ(s.preference, Q(1, 5));
  }

  auto nash = NashEquilibria(LocalMap(p));
  EXPECT_EQ(Words(p.variables, nash), (Set{"aab", "bbb"}));

  // abb is optimal but not an equilibrium.
  EXPECT_EQ(Words(p.variables, optimal).count("abb"), 1u);
  EXPECT_EQ(Words(p.variables, nash).count("abb"), 0u);
}

TEST(Golden, WeightedOneConstraint) {
  auto p = Load<SoftCsp>("weighted_one.scsp");
  auto optimal = OptimalSolutions(p);
  EXPECT_EQ(Words(p.variables, Assignments(optimal)), Set{"bb"});
  EXPECT_EQ(optimal[0].preference, Q(1));
  PayoffGame game = LocalMap(p);
  EXPECT_EQ(Words(p.variables, NashEquilibria(game)), (Set{"aa", "bb"}));
}

TEST(Golden, WeightedUnaryAndBinary) {
  auto p = Load<SoftCsp>("weighted_two.scsp");
  auto optimal = OptimalSolutions(p);
  EXPECT_EQ(Words(p.variables, Assignments(optimal)), Set{"aa"});
  EXPECT_EQ(optimal[0].preference, Q(6));

  PayoffGame game = LocalMap(p);
  // Costs of the constraints each player takes part in.
  EXPECT_EQ(Payoff(game, 0, Parse(p.variables, "aa")), Q(2));
  EXPECT_EQ(Payoff(game, 1, Parse(p.variables, "aa")), Q(4));
  EXPECT_EQ(Payoff(game, 0, Parse(p.variables, "bb")), Q(1));
  EXPECT_EQ(Payoff(game, 1, Parse(p.variables, "bb")), Q(7));
  auto nash = NashEquilibria(game);
  auto both = Intersect(nash, ParetoEfficient(game));
  EXPECT_EQ(Words(p.variables, both), (Set{"aa", "bb"}));
  EXPECT_EQ(Words(p.variables, Assignments(ParetoNash(game))),
            (Set{"aa", "bb"}));
}

TEST(Golden, ClassicalCsp) {
  auto p = Load<SoftCsp>("classical.scsp");
  EXPECT_FALSE(IsConsistent(p));
  auto baa = Parse(p.variables, "baa");
  EXPECT_EQ(SolutionPreference(p, baa), SemiringValue::Bool(false));
  auto optimal = Assignments(OptimalSolutions(p));
  EXPECT_EQ(optimal.size(), 8u);
  EXPECT_EQ(Words(p.variables, optimal).count("baa"), 1u);

  auto nash = NashEquilibria(LocalMap(p));
  EXPECT_EQ(Words(p.variables, nash).count("baa"), 0u);
  EXPECT_EQ(nash, oracle::BruteNash(LocalMap(p)));
}

TEST(Golden, AcyclicFourFeatureNet) {
  auto net = Load<CpNet>("acyclic4.cpnet");
  EXPECT_TRUE(IsAcyclic(net));
  EXPECT_EQ(Word(net.variables, SweepOptimal(net)), "abcd");
  EXPECT_EQ(Words(net.variables, OptimalOutcomes(net)), Set{"abcd"});
  EXPECT_EQ(Words(net.variables, oracle::BruteOptimalOutcomes(net)),
            Set{"abcd"});
  EXPECT_TRUE(IsEligible(net));

  // ab c' d: flipping C to c improves.
  Assignment abcbar_d = {0, 0, 1, 0};
  auto flips = ImprovingFlips(net, abcbar_d);
  EXPECT_NE(std::find(flips.begin(), flips.end(), Flip{2, 0}), flips.end());
  EXPECT_TRUE(ImprovingFlips(net, {0, 0, 0, 0}).empty());

  // a' b c' d' is worse than abcd.
  EXPECT_EQ(Dominates(net, {0, 0, 0, 0}, {1, 0, 1, 1}), Dominance::kDominates);
  EXPECT_EQ(Dominates(net, {0, 0, 0, 0}, {0, 0, 0, 0}),
            Dominance::kNotDominated);

  // opt(N) contains the unconditional constraint A = a.
  SoftCsp opt = OptimalityConstraints(net);
  bool found = false;
  for (const SoftConstraint& c : opt.constraints) {
    if (c.scope == std::vector<int>{0}) {
      EXPECT_EQ(c.table, (std::vector<SemiringValue>{
                             SemiringValue::Bool(true),
                             SemiringValue::Bool(false)}));
      found = true;
    }
  }
  EXPECT_TRUE(found);

  auto nbr = ReduceToFixpoint(net, EliminationMode::kNeverBestResponse);
  for (const Variable& v : nbr.result.variables) EXPECT_EQ(v.size(), 1);
  EXPECT_EQ(Word(nbr.result.variables, Assignment(4, 0)), "abcd");
  EXPECT_TRUE(IsHierarchical(GameOfCpnet(net)));
}

TEST(Golden, CyclicFourFeatureNet) {
  auto net = Load<CpNet>("cyclic4.cpnet");
  EXPECT_FALSE(IsAcyclic(net));
  EXPECT_EQ(Words(net.variables, OptimalOutcomes(net)), Set{"abcd"});
  EXPECT_TRUE(IsEligible(net));

  auto run = ReduceToFixpoint(net, EliminationMode::kStrictlyDominated);
  ASSERT_EQ(run.steps.size(), 4u);
  const char* removed[] = {"a'", "b'", "c'", "d'"};
  for (int k = 0; k < 4; ++k) {
    std::vector<std::vector<std::string>> expected(4);
    expected[k] = {removed[k]};
    EXPECT_EQ(run.steps[k].removed, expected) << "round " << k + 1;
  }
  for (const Variable& v : run.result.variables) EXPECT_EQ(v.size(), 1);
  EXPECT_EQ(Word(run.result.variables, Assignment(4, 0)), "abcd");

  // Player B of G(N) depends only on A and answers a with b.
  PpGame game = GameOfCpnet(net);
  EXPECT_EQ(game.neighbours(1), std::vector<int>{0});
  EXPECT_EQ(BestResponseTo(game, 1, {0, 1, 0, 0}), 0);
}

TEST(Golden, TwoFeatureCycle) {
  auto net = Load<CpNet>("cyclic2.cpnet");
  EXPECT_FALSE(IsEligible(net));
  EXPECT_TRUE(OptimalOutcomes(net).empty());
  EXPECT_TRUE(oracle::BruteOptimalOutcomes(net).empty());
  EXPECT_EQ(Dominates(net, {0, 0}, {0, 0}), Dominance::kDominates);
  EXPECT_TRUE(NashEquilibria(GameOfCpnet(net)).empty());
}

TEST(Golden, RedundantParents) {
  auto net = Load<CpNet>("reduce3.cpnet");
  EXPECT_FALSE(IsReduced(net));
  EXPECT_EQ(RedundantParents(net, 2), (std::vector<int>{0, 1}));
  CpNet reduced = Reduce(net);
  EXPECT_TRUE(reduced.parents(2).empty());
  ASSERT_EQ(reduced.tables[2].rows.size(), 1u);
  EXPECT_EQ(reduced.tables[2].rows[0], StrictOrder({1, 0}));
  EXPECT_EQ(Reduce(reduced), reduced);
}

TEST(Golden, PrisonersDilemmaPreferenceGame) {
  auto game = Load<PpGame>("pd.ppgame");
  EXPECT_EQ(BestResponse(game, 0, std::vector<int>{0}), 1);
  EXPECT_TRUE(IsStrictlyDominated(game, 0, 0));
  EXPECT_TRUE(IsStrictlyDominated(game, 1, 0));
  EXPECT_EQ(Words(game.players, NashEquilibria(game)), Set{"N1N2"});

  auto run = ReducePpFixpoint(game, EliminationMode::kStrictlyDominated);
  ASSERT_EQ(run.steps.size(), 1u);
  EXPECT_EQ(run.steps[0].removed,
            (std::vector<std::vector<std::string>>{{"C1"}, {"C2"}}));
  EXPECT_EQ(run.result.players[0].domain, std::vector<std::string>{"N1"});
  EXPECT_EQ(run.result.players[1].domain, std::vector<std::string>{"N2"});

  Hierarchy h = AnalyzeHierarchy(game);
  EXPECT_TRUE(h.hierarchical);
  EXPECT_EQ(h.levels, (std::vector<int>{0, 0}));
  EXPECT_EQ(h.hierarchical, oracle::BruteHierarchical(game));

  // N(PD): the row X2 = C2 of X1 is N1 > C1.
  CpNet net = CpnetOfGame(game);
  EXPECT_EQ(RowFor(net, 0, {0, 0}), StrictOrder({1, 0}));
}

TEST(Golden, PrisonersDilemmaPayoffs) {
  auto game = Load<PayoffGame>("pd.game");
  EXPECT_EQ(Words(game.players, NashEquilibria(game)), Set{"nn"});
  EXPECT_EQ(Words(game.players, ParetoEfficient(game)),
            (Set{"cc", "cn", "nc"}));
  EXPECT_EQ(Words(game.players, oracle::BrutePareto(game)),
            (Set{"cc", "cn", "nc"}));

  SoftCsp lp = ScspOfGame(game, Rational(10));
  ASSERT_EQ(lp.constraints.size(), 2u);
  // Row-major over (x1, x2): cc, cn, nc, nn.
  EXPECT_EQ(lp.constraints[0].table,
            (std::vector<SemiringValue>{Pair(7, 0), Pair(10, 0), Pair(6, 0),
                                        Pair(9, 0)}));
  EXPECT_EQ(lp.constraints[1].table,
            (std::vector<SemiringValue>{Pair(0, 7), Pair(0, 6), Pair(0, 10),
                                        Pair(0, 9)}));

  auto optimal = OptimalSolutions(lp);
  ASSERT_EQ(optimal.size(), 3u);
  EXPECT_EQ(Word(game.players, optimal[0].assignment), "cc");
  EXPECT_EQ(optimal[0].preference, Pair(7, 7));
  EXPECT_EQ(Word(game.players, optimal[1].assignment), "cn");
  EXPECT_EQ(optimal[1].preference, Pair(10, 6));
  EXPECT_EQ(Word(game.players, optimal[2].assignment), "nc");
  EXPECT_EQ(optimal[2].preference, Pair(6, 10));

  SoftCsp joined = Join(lp, RegretConstraints(game));
  EXPECT_EQ(SolutionPreference(joined, {1, 1}), Pair(9, 9));
  auto pn = ParetoNash(game, Rational(10));
  ASSERT_EQ(pn.size(), 1u);
  EXPECT_EQ(Word(game.players, pn[0].assignment), "nn");
  EXPECT_EQ(pn[0].preference, Pair(9, 9));

  EXPECT_EQ(io::ParseDocument(io::Serialize(io::Document{game})),
            io::Document{game});
}

TEST(Golden, DirectedThreeCycle) {
  auto graph = Load<Digraph>("cycle3.graph");
  EXPECT_FALSE(WellStructuredLevels(graph).has_value());
  EXPECT_EQ(oracle::BruteWellStructured(graph).answer, oracle::Answer::kNo);
}

}  // namespace
}  // namespace optiform
