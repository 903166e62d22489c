// Prints one PASS/FAIL line per acceptance criterion.
//
// Criterion 7 includes the claim that every optimal solution of a strictly
// monotonic problem is Pareto efficient in L(P). That claim is false (see
// theorem_test.cc for a two-variable counterexample), so criterion 7 prints
// FAIL. The exit status is nonzero unless strict_monotone_pareto is the only
// failing suite of criterion 7 and every other criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "optiform/bridge.h"
#include "optiform/oracle.h"
#include "support.h"

namespace optiform {
namespace {

using testing::Assignments;
using testing::Intersect;
using testing::Load;
using testing::Word;
using testing::Words;
using Set = std::set<std::string>;

struct Result {
  bool pass = true;
  std::string note;
  // Differs from `pass` only where a failure is known and documented.
  bool as_expected = true;
};

// Collects failed checks without stopping at the first one.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      result_.pass = false;
      if (!result_.note.empty()) result_.note += "; ";
      result_.note += what;
    }
  }
  void Time(double seconds, double limit) {
    Expect(seconds < limit, "took " + std::to_string(seconds) + " s");
  }
  Result result() const {
    Result r = result_;
    r.as_expected = r.pass;
    return r;
  }

 private:
  Result result_;
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Result Criterion1() {
  Checker c;
  auto start = Clock::now();
  auto p = Load<SoftCsp>("fuzzy3.scsp");
  auto optimal = OptimalSolutions(p);
  c.Expect(optimal.size() == 1 && Word(p.variables, optimal[0].assignment) ==
                                      "bbb" &&
               optimal[0].preference == SemiringValue::Number(1, 2),
           "optimal set is not {bbb @ 0.5}");
  c.Time(Since(start), 1);
  return c.result();
}

Result Criterion2() {
  Checker c;
  auto start = Clock::now();
  auto p = Load<SoftCsp>("fuzzy3.scsp");
  c.Expect(Words(p.variables, NashEquilibria(LocalMap(p))) ==
               Set{"aaa", "bbb"},
           "Nash of L(P) is not {aaa, bbb}");
  auto q = Load<SoftCsp>("fuzzy3b.scsp");
  c.Expect(Words(q.variables, Assignments(OptimalSolutions(q))) ==
               Set{"aab", "abb", "bab", "bbb"},
           "second problem optimal set");
  c.Expect(Words(q.variables, NashEquilibria(LocalMap(q))) ==
               Set{"aab", "bbb"},
           "second problem Nash set");
  c.Time(Since(start), 1);
  return c.result();
}

Result Criterion3() {
  Checker c;
  auto start = Clock::now();
  auto one = Load<SoftCsp>("weighted_one.scsp");
  c.Expect(Words(one.variables, NashEquilibria(LocalMap(one))) ==
               Set{"aa", "bb"},
           "one-constraint Nash set");
  c.Expect(Words(one.variables, Assignments(OptimalSolutions(one))) ==
               Set{"bb"},
           "one-constraint optimal set");
  auto two = Load<SoftCsp>("weighted_two.scsp");
  PayoffGame game = LocalMap(two);
  c.Expect(Words(two.variables,
                 Intersect(NashEquilibria(game), ParetoEfficient(game))) ==
               Set{"aa", "bb"},
           "unary+binary Nash and Pareto set");
  c.Expect(Words(two.variables, Assignments(OptimalSolutions(two))) ==
               Set{"aa"},
           "unary+binary optimal set");
  c.Time(Since(start), 1);
  return c.result();
}

Result Criterion4() {
  Checker c;
  auto start = Clock::now();
  auto p = Load<SoftCsp>("classical.scsp");
  auto optimal = OptimalSolutions(p);
  bool found = false;
  for (const Solution& s : optimal) {
    if (Word(p.variables, s.assignment) == "baa") {
      found = true;
      c.Expect(s.preference == SemiringValue::Bool(false),
               "baa preference is not 0");
    }
  }
  c.Expect(found, "baa is not optimal");
  c.Expect(Words(p.variables, NashEquilibria(LocalMap(p))).count("baa") == 0,
           "baa is a Nash equilibrium of L(P)");
  c.Time(Since(start), 1);
  return c.result();
}

Result Criterion5() {
  Checker c;
  auto start = Clock::now();
  auto acyclic = Load<CpNet>("acyclic4.cpnet");
  c.Expect(Word(acyclic.variables, SweepOptimal(acyclic)) == "abcd",
           "sweep is not abcd");
  c.Expect(Words(acyclic.variables, oracle::BruteOptimalOutcomes(acyclic)) ==
               Set{"abcd"},
           "brute force is not {abcd}");
  c.Time(Since(start), 1);

  start = Clock::now();
  auto cyclic = Load<CpNet>("cyclic4.cpnet");
  auto run = ReduceToFixpoint(cyclic, EliminationMode::kStrictlyDominated);
  const char* removed[] = {"a'", "b'", "c'", "d'"};
  bool chain = run.steps.size() == 4;
  for (std::size_t k = 0; chain && k < 4; ++k) {
    std::vector<std::vector<std::string>> expected(4);
    expected[k] = {removed[k]};
    chain = run.steps[k].removed == expected;
  }
  c.Expect(chain, "S-elimination chain differs");
  bool singletons = true;
  for (const Variable& v : run.result.variables) singletons &= v.size() == 1;
  c.Expect(singletons && Word(run.result.variables, Assignment(4, 0)) ==
                             "abcd",
           "final outcome is not abcd");
  c.Time(Since(start), 1);

  start = Clock::now();
  auto two = Load<CpNet>("cyclic2.cpnet");
  c.Expect(!IsEligible(two), "two-feature net is eligible");
  c.Expect(OptimalOutcomes(two).empty(), "two-feature net has an optimum");
  c.Time(Since(start), 1);
  return c.result();
}

SemiringValue Pair(int a, int b) {
  return SemiringValue::Tuple(
      {SemiringValue::Number(a), SemiringValue::Number(b)});
}

Result Criterion6() {
  Checker c;
  auto start = Clock::now();
  auto game = Load<PayoffGame>("pd.game");
  c.Expect(Words(game.players, NashEquilibria(game)) == Set{"nn"},
           "Nash set is not {nn}");
  c.Expect(Words(game.players, ParetoEfficient(game)) ==
               Set{"cc", "cn", "nc"},
           "Pareto set is not {cc, cn, nc}");
  SoftCsp lp = ScspOfGame(game, Rational(10));
  c.Expect(lp.constraints.size() == 2 &&
               lp.constraints[0].table ==
                   std::vector<SemiringValue>{Pair(7, 0), Pair(10, 0),
                                              Pair(6, 0), Pair(9, 0)} &&
               lp.constraints[1].table ==
                   std::vector<SemiringValue>{Pair(0, 7), Pair(0, 6),
                                              Pair(0, 10), Pair(0, 9)},
           "def tuples of L'(PD) differ");
  auto pn = ParetoNash(game, Rational(10));
  c.Expect(pn.size() == 1 && Word(game.players, pn[0].assignment) == "nn" &&
               pn[0].preference == Pair(9, 9),
           "pareto_nash is not {nn @ <9,9>}");
  c.Time(Since(start), 1);
  return c.result();
}

Result Criterion7() {
  Checker c;
  auto start = Clock::now();
  std::set<std::string> failing;
  const char* ids[] = {"G_of_N",       "N_of_G",
                       "reduced",      "nbr_game",
                       "nbr_net",      "ienbr",
                       "nets_ienbr",   "acyclic",
                       "acyclic1",     "strict_monotone_nash",
                       "strict_monotone_pareto", "csp",
                       "thm10",        "t1",
                       "regret_nash",  "pareto_nash"};
  for (const char* id : ids) {
    int failed = 0;
    int passed = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto v = oracle::RunTheorem(id, seed);
      failed += v.outcome == oracle::Outcome::kFail;
      passed += v.outcome == oracle::Outcome::kPass;
    }
    c.Expect(passed == 100, std::string(id) + " " + std::to_string(passed) +
                                "/100 pass, " + std::to_string(failed) +
                                " counterexamples");
    if (passed != 100) failing.insert(id);
  }
  double seconds = Since(start);
  c.Time(seconds, 60);
  Result r = c.result();
  r.as_expected = seconds < 60 &&
                  failing == std::set<std::string>{"strict_monotone_pareto"};
  return r;
}

Result Criterion8() {
  Checker c;
  auto start = Clock::now();
  int passed = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    passed += oracle::RunTheorem("acyclic2", seed).outcome ==
              oracle::Outcome::kPass;
  }
  c.Expect(passed == 100, std::to_string(passed) + "/100 DAGs end all-t1");
  Digraph cycle{{"p", "q", "r"}, {{0, 1}, {1, 2}, {2, 0}}};
  c.Expect(!WellStructuredLevels(cycle).has_value(),
           "3-cycle reported well-structured");
  c.Time(Since(start), 10);
  return c.result();
}

// Both directions of inclusion fail on fuzzy problems.
Result Criterion9() {
  Checker c;
  auto start = Clock::now();
  auto p = Load<SoftCsp>("fuzzy3.scsp");
  auto nash = Words(p.variables, NashEquilibria(LocalMap(p)));
  auto optimal = Words(p.variables, Assignments(OptimalSolutions(p)));
  c.Expect(nash.count("aaa") == 1 && optimal.count("aaa") == 0,
           "no Nash equilibrium outside the optimal set");
  auto q = Load<SoftCsp>("fuzzy3b.scsp");
  nash = Words(q.variables, NashEquilibria(LocalMap(q)));
  optimal = Words(q.variables, Assignments(OptimalSolutions(q)));
  c.Expect(optimal.count("abb") == 1 && nash.count("abb") == 0,
           "no optimal solution outside the Nash set");

  // The same witnesses from the oracle.
  auto brute_nash = Words(p.variables, oracle::BruteNash(LocalMap(p)));
  c.Expect(brute_nash.count("aaa") == 1, "oracle disagrees on aaa");
  auto brute_opt =
      Words(q.variables, Assignments(oracle::BruteOptimalSolutions(q)));
  c.Expect(brute_opt.count("abb") == 1, "oracle disagrees on abb");
  c.Time(Since(start), 1);
  return c.result();
}

}  // namespace
}  // namespace optiform

int main() {
  using namespace optiform;
  const std::vector<std::function<Result()>> criteria = {
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,
      Criterion6, Criterion7, Criterion8, Criterion9};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
    if (!r.as_expected) ++unexpected;
  }
  if (unexpected == 0) {
    std::cout << "criterion 7 fails only on strict_monotone_pareto, whose "
                 "claim has counterexamples\n";
  }
  return unexpected == 0 ? 0 : 1;
}
