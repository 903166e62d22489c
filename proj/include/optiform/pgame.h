#ifndef OPTIFORM_PGAME_H_
#define OPTIFORM_PGAME_H_

// Two kinds of finite games share this header.
//
// PpGame: each player holds a strict order over its own strategies for every
// joint strategy of its neighbours (a classical game is the case where every
// other player is a neighbour). Nash equilibria here are strict: every
// player plays the top of the order its neighbours select.
//
// PayoffGame: a graphical game whose payoffs live in a linearly ordered
// carrier. Nash equilibria use the weak inequality p_i(s) >= p_i(s'_i, s_-i).

#include <optional>
#include <span>
#include <vector>

#include "optiform/common.h"
#include "optiform/graph.h"
#include "optiform/order.h"
#include "optiform/semiring.h"

namespace optiform {

struct PpGame {
  std::vector<Variable> players;  // domain = strategy labels
  // prefs[i].conditions is neigh(i).
  std::vector<ConditionalTable> prefs;

  const std::vector<int>& neighbours(int player) const {
    return prefs[player].conditions;
  }
  bool operator==(const PpGame&) const = default;
};

void Validate(const PpGame& game);

// Top of the order selected by the neighbours' strategies, given in the
// order of neighbours(player).
int BestResponse(const PpGame& game, int player,
                 std::span<const int> neighbour_strategies);
// Same, reading the neighbours' strategies from a full profile.
int BestResponseTo(const PpGame& game, int player, const Assignment& profile);

bool IsNeverBestResponse(const PpGame& game, int player, int strategy);
bool IsStrictlyDominated(const PpGame& game, int player, int strategy);

ValueSets NeverBestResponses(const PpGame& game);
ValueSets StrictlyDominatedStrategies(const PpGame& game);

// Lexicographic order.
std::vector<Assignment> NashEquilibria(const PpGame& game);

// The subgame without `removals`.
PpGame Subgame(const PpGame& game, const ValueSets& removals);

// One round removing every currently eligible strategy; unchanged when none.
PpGame ReducePp(const PpGame& game, EliminationMode mode);

struct GameElimination {
  PpGame result;
  std::vector<EliminationStep> steps;
};
GameElimination ReducePpFixpoint(const PpGame& game, EliminationMode mode);

struct Hierarchy {
  bool hierarchical = false;
  // Neighbours whose strategy actually changes some order of the player.
  std::vector<std::vector<int>> dependencies;
  // Longest dependency chain below each player; empty when cyclic.
  std::vector<int> levels;
};

// Players with no dependencies are level 0, so games with constant
// preferences are hierarchical.
Hierarchy AnalyzeHierarchy(const PpGame& game);
bool IsHierarchical(const PpGame& game);

// Technology adoption on `graph` with k technologies t1..tk. A node's
// neighbours are the sources of its incoming edges; it ranks technologies by
// how many neighbours use them, ties broken toward the lower index.
PpGame TechGame(const Digraph& graph, int k);

// Every node has at least as many incoming edges from strictly lower levels
// as from nodes of the same or a higher level.
bool LevelsWellStructured(const Digraph& graph, std::span<const int> levels);

// Decides well-structuredness exactly. Levels are built greedily: a node is
// placed on the next level once its in-edges from already placed nodes are
// at least half of its in-degree. Placement only becomes easier as more
// nodes are placed, so the greedy closure covers every node iff some valid
// level assignment exists. Returns that assignment, or nullopt.
std::optional<std::vector<int>> WellStructuredLevels(const Digraph& graph);

// ---------------------------------------------------------------------------

struct PayoffGame {
  // nullopt: plain rationals, larger is better. Otherwise a linear semiring
  // whose order ranks payoffs (so weighted payoffs are costs).
  std::optional<SemiringSpec> carrier;
  std::vector<Variable> players;
  // Ascending, never the player itself.
  std::vector<std::vector<int>> neighbours;
  // payoffs[i] is indexed row-major over PayoffScope(i).
  std::vector<std::vector<SemiringValue>> payoffs;

  bool operator==(const PayoffGame&) const = default;
};

// neigh(i) plus i, ascending.
std::vector<int> PayoffScope(const PayoffGame& game, int player);

void Validate(const PayoffGame& game);

// Canonical extension of p_i to a full profile.
const SemiringValue& Payoff(const PayoffGame& game, int player,
                            const Assignment& profile);

// How payoff `a` relates to `b` on the game's scale.
PreferenceOrder ComparePayoffs(const PayoffGame& game, const SemiringValue& a,
                               const SemiringValue& b);

// a <_P b on the payoff vectors of two profiles.
bool ParetoLess(const PayoffGame& game, const Assignment& a,
                const Assignment& b);

std::vector<Assignment> NashEquilibria(const PayoffGame& game);
std::vector<Assignment> ParetoEfficient(const PayoffGame& game);

// Strategies of `player` that weakly maximise its payoff against the
// neighbour part of `profile`.
std::vector<int> BestResponses(const PayoffGame& game, int player,
                               const Assignment& profile);

}  // namespace optiform

#endif  // OPTIFORM_PGAME_H_
