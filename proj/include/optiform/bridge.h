#ifndef OPTIFORM_BRIDGE_H_
#define OPTIFORM_BRIDGE_H_

// Translations between CP-nets, parametrized games, payoff games and soft
// CSPs.

#include <optional>
#include <vector>

#include "optiform/cpnet.h"
#include "optiform/pgame.h"
#include "optiform/softcsp.h"

namespace optiform {

// G(N): players are the variables, neighbours are the parents and every
// preference row is copied from the matching table row.
PpGame GameOfCpnet(const CpNet& net);

// N(G): every other player becomes a parent. Rows are keyed by the full
// opponent profile and ignore non-neighbour coordinates.
CpNet CpnetOfGame(const PpGame& game);

// L(P): player i is paid the combination of the constraints whose scope
// holds x_i, evaluated on its neighbourhood (variables sharing one of those
// constraints). Throws ValidationError for product semirings.
PayoffGame LocalMap(const SoftCsp& problem);

// GL(P): every player is paid the solution preference.
PayoffGame GlobalMap(const SoftCsp& problem);

// f in L'(G): sends a payoff of the game to a weighted cost so that higher
// payoffs become strictly better costs.
struct OrderPreservingMap {
  // Scale of the payoffs; nullopt for plain rationals.
  std::optional<SemiringSpec> source;
  // Cost = offset - payoff. Unused when the payoffs already are weighted
  // costs, which map to themselves.
  Rational offset;

  SemiringValue Apply(const SemiringValue& payoff) const;
};

// Offset defaults to the largest payoff. Throws ValidationError when an
// offset is below some payoff, or is given for a weighted carrier.
OrderPreservingMap MakeOrderPreservingMap(const PayoffGame& game,
                                          std::optional<Rational> offset);

// L'(G): one constraint per player over PayoffScope(i) in the n-fold product
// of weighted semirings. Coordinate i holds f(p_i), the others hold 0.
SoftCsp ScspOfGame(const PayoffGame& game,
                   std::optional<Rational> offset = std::nullopt);

// H(G): per player, a hard constraint over PayoffScope(i) allowing exactly
// the tuples where i's strategy weakly maximises p_i.
SoftCsp RegretConstraints(const PayoffGame& game);

// Optimal solutions of L'(G) joined with H(G) whose preference is above the
// all-infinity tuple: the Pareto efficient Nash equilibria of G.
std::vector<Solution> ParetoNash(const PayoffGame& game,
                                 std::optional<Rational> offset = std::nullopt);

}  // namespace optiform

#endif  // OPTIFORM_BRIDGE_H_
