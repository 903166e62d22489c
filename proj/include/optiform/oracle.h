#ifndef OPTIFORM_ORACLE_H_
#define OPTIFORM_ORACLE_H_

// Reference implementations that follow the definitions literally, random
// instance generators, and theorem checks built on both.
//
// Nothing here calls the solvers of the cpnet, softcsp, pgame or bridge
// modules; only the data types, the semiring algebra and (where a theorem is
// about a translation) the translation under test are shared.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "optiform/bridge.h"
#include "optiform/cpnet.h"
#include "optiform/graph.h"
#include "optiform/pgame.h"
#include "optiform/softcsp.h"

namespace optiform::oracle {

// ---------------------------------------------------------------------------
// Brute-force solvers. All results are in lexicographic order and throw
// BoundError beyond MaxSpace().

std::vector<Assignment> BruteOptimalOutcomes(const CpNet& net);
// Pairs (outcome, improved outcome) for every improving flip.
std::vector<std::pair<Assignment, Assignment>> BruteFlipEdges(const CpNet& net);
// Depth-first reachability over worsening flips.
bool BruteDominates(const CpNet& net, const Assignment& better,
                    const Assignment& worse);

std::vector<Assignment> BruteNash(const PpGame& game);
std::vector<Assignment> BruteNash(const PayoffGame& game);
std::vector<Assignment> BrutePareto(const PayoffGame& game);

// Maximal assignments by pairwise comparison.
std::vector<Solution> BruteOptimalSolutions(const SoftCsp& problem);
// Assignments of preference 1.
std::vector<Assignment> BrutePerfectSolutions(const SoftCsp& problem);

// Per player, the neighbours whose strategy changes some order.
std::vector<std::vector<int>> BruteDependencies(const PpGame& game);
bool BruteHierarchical(const PpGame& game);

enum class Answer { kYes, kNo, kUnknown };

struct WellStructuredSearch {
  Answer answer = Answer::kUnknown;
  std::vector<int> levels;  // witness when kYes
};

inline constexpr int kDefaultWellStructuredNodeLimit = 12;
inline constexpr std::uint64_t kDefaultWellStructuredBudget = 10'000'000;

// Backtracking over level assignments with levels in 0..n-1. Gives up with
// kUnknown beyond `node_limit` nodes or `budget` visited partial
// assignments.
WellStructuredSearch BruteWellStructured(
    const Digraph& graph, int node_limit = kDefaultWellStructuredNodeLimit,
    std::uint64_t budget = kDefaultWellStructuredBudget);

// ---------------------------------------------------------------------------
// Generators.

// Deterministic across platforms: mt19937_64 with plain modulo reduction.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  int Uniform(int lo, int hi);
  bool Chance(double p);
  std::vector<int> Permutation(int n);

 private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int min_vars = 1;
  int max_vars = 4;
  int min_domain = 2;
  int max_domain = 3;
  // Carrier of soft CSPs and payoff games. nullopt for payoff games means
  // plain rationals.
  std::optional<SemiringSpec> carrier;
  bool acyclic = false;
  // Boolean CSPs: plant a solution so the problem is consistent.
  bool consistent = false;
  // Games: force an acyclic minimal dependency graph, then widen every
  // neighbourhood to all opponents.
  bool hierarchical = false;
  double edge_density = 0.5;
  // Chance that a parent (or neighbour) is made redundant: the rows ignore
  // it.
  double redundancy = 0.0;
  int max_scope = 3;
  int max_payoff = 9;
};

CpNet RandomCpnet(const GeneratorConfig& cfg);
SoftCsp RandomScsp(const GeneratorConfig& cfg);
PayoffGame RandomPayoffGame(const GeneratorConfig& cfg);
PpGame RandomPpGame(const GeneratorConfig& cfg);
// Acyclic; node count drawn from [min_vars, max_vars].
Digraph RandomDag(const GeneratorConfig& cfg);

// ---------------------------------------------------------------------------
// Theorem checks.

using Instance = std::variant<CpNet, PpGame, PayoffGame, SoftCsp, Digraph>;

enum class Outcome { kPass, kFail, kSkipped };

struct Verdict {
  Outcome outcome = Outcome::kPass;
  // Counterexample on failure, unmet hypothesis when skipped.
  std::string detail;
};

// Known ids, in a stable order.
const std::vector<std::string>& TheoremIds();

// The generator configuration used for `id` by RunTheorem.
GeneratorConfig TheoremConfig(std::string_view id, std::uint64_t seed);
Instance GenerateInstance(std::string_view id, const GeneratorConfig& cfg);

// Throws ValidationError for an unknown id or a mismatched instance kind.
Verdict CheckTheorem(std::string_view id, const Instance& instance);

// Generates the seeded instance for `id` and checks it.
Verdict RunTheorem(std::string_view id, std::uint64_t seed);

}  // namespace optiform::oracle

#endif  // OPTIFORM_ORACLE_H_
