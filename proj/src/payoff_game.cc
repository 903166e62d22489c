#include "optiform/pgame.h"

#include <algorithm>

namespace optiform {

std::vector<int> PayoffScope(const PayoffGame& game, int player) {
  std::vector<int> scope = game.neighbours[player];
  scope.push_back(player);
  std::sort(scope.begin(), scope.end());
  return scope;
}

void Validate(const PayoffGame& game) {
  if (game.players.empty()) throw ValidationError("game has no players");
  ValidateVariables(game.players, "player");
  const int n = static_cast<int>(game.players.size());
  if (game.carrier && !game.carrier->is_linear()) {
    throw ValidationError("payoff carrier " + game.carrier->ToString() +
                          " is not linearly ordered");
  }
  if (static_cast<int>(game.neighbours.size()) != n ||
      static_cast<int>(game.payoffs.size()) != n) {
    throw ValidationError(
        "game: expected one neighbour list and one payoff table per player");
  }
  for (int i = 0; i < n; ++i) {
    const std::string who = "player '" + game.players[i].name + "'";
    const auto& neigh = game.neighbours[i];
    for (std::size_t k = 0; k < neigh.size(); ++k) {
      if (neigh[k] < 0 || neigh[k] >= n) {
        throw ValidationError(who + ": neighbour index out of range");
      }
      if (neigh[k] == i) {
        throw ValidationError(who + " cannot be its own neighbour");
      }
      if (k > 0 && neigh[k] <= neigh[k - 1]) {
        throw ValidationError(who +
                              ": neighbours must be ascending and distinct");
      }
    }
    std::vector<int> radices = Radices(game.players, PayoffScope(game, i));
    CheckSpace(radices, who + " payoffs");
    if (game.payoffs[i].size() != SpaceSize(radices)) {
      throw ValidationError(who + ": payoff table has " +
                            std::to_string(game.payoffs[i].size()) +
                            " entries, expected " +
                            std::to_string(SpaceSize(radices)));
    }
    for (std::size_t t = 0; t < game.payoffs[i].size(); ++t) {
      const SemiringValue& v = game.payoffs[i][t];
      const std::string where = who + " payoff " + std::to_string(t);
      if (game.carrier) {
        RequireCarrier(*game.carrier, v, where);
      } else if (!v.is_number()) {
        throw CarrierError(where + ": expected a rational, got " +
                           v.ToString());
      }
    }
  }
}

const SemiringValue& Payoff(const PayoffGame& game, int player,
                            const Assignment& profile) {
  std::vector<int> scope = PayoffScope(game, player);
  std::vector<int> radices = Radices(game.players, scope);
  std::vector<int> digits = Project(profile, scope);
  return game.payoffs[player][TupleIndex(radices, digits)];
}

PreferenceOrder ComparePayoffs(const PayoffGame& game, const SemiringValue& a,
                               const SemiringValue& b) {
  if (game.carrier) return Compare(*game.carrier, a, b);
  const Rational& x = a.as_number();
  const Rational& y = b.as_number();
  if (x < y) return PreferenceOrder::kWorse;
  if (y < x) return PreferenceOrder::kBetter;
  return PreferenceOrder::kEqual;
}

namespace {

// Payoff vectors compared componentwise.
PreferenceOrder CompareVectors(const PayoffGame& game,
                               const std::vector<SemiringValue>& a,
                               const std::vector<SemiringValue>& b) {
  bool better = false;
  bool worse = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    switch (ComparePayoffs(game, a[i], b[i])) {
      case PreferenceOrder::kBetter:
        better = true;
        break;
      case PreferenceOrder::kWorse:
        worse = true;
        break;
      default:
        break;
    }
  }
  if (better && worse) return PreferenceOrder::kIncomparable;
  if (better) return PreferenceOrder::kBetter;
  if (worse) return PreferenceOrder::kWorse;
  return PreferenceOrder::kEqual;
}

std::vector<SemiringValue> PayoffVector(const PayoffGame& game,
                                        const Assignment& profile) {
  std::vector<SemiringValue> out;
  out.reserve(game.players.size());
  for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
    out.push_back(Payoff(game, i, profile));
  }
  return out;
}

// For each player, whether each row of its payoff table is a weak best
// response to the neighbour part of that row.
std::vector<std::vector<bool>> BestResponseTables(const PayoffGame& game) {
  std::vector<std::vector<bool>> out;
  for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
    std::vector<int> scope = PayoffScope(game, i);
    std::vector<int> radices = Radices(game.players, scope);
    const std::size_t own =
        std::find(scope.begin(), scope.end(), i) - scope.begin();
    const auto& table = game.payoffs[i];
    std::vector<bool> best(table.size(), false);
    std::vector<int> digits(radices.size(), 0);
    do {
      if (digits[own] != 0) continue;
      std::vector<std::size_t> rows;
      std::vector<int> probe = digits;
      for (int s = 0; s < radices[own]; ++s) {
        probe[own] = s;
        rows.push_back(TupleIndex(radices, probe));
      }
      for (std::size_t r : rows) {
        best[r] = std::none_of(rows.begin(), rows.end(), [&](std::size_t q) {
          return ComparePayoffs(game, table[q], table[r]) ==
                 PreferenceOrder::kBetter;
        });
      }
    } while (NextTuple(radices, digits));
    out.push_back(std::move(best));
  }
  return out;
}

}  // namespace

bool ParetoLess(const PayoffGame& game, const Assignment& a,
                const Assignment& b) {
  return CompareVectors(game, PayoffVector(game, a), PayoffVector(game, b)) ==
         PreferenceOrder::kWorse;
}

std::vector<Assignment> NashEquilibria(const PayoffGame& game) {
  std::vector<int> radices = DomainSizes(game.players);
  CheckSpace(radices, "nash equilibria");
  auto best = BestResponseTables(game);
  std::vector<std::vector<int>> scopes;
  std::vector<std::vector<int>> scope_radices;
  for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
    scopes.push_back(PayoffScope(game, i));
    scope_radices.push_back(Radices(game.players, scopes.back()));
  }
  std::vector<Assignment> out;
  Assignment s(radices.size(), 0);
  do {
    bool stable = true;
    for (std::size_t i = 0; stable && i < scopes.size(); ++i) {
      stable = best[i][TupleIndex(scope_radices[i], Project(s, scopes[i]))];
    }
    if (stable) out.push_back(s);
  } while (NextTuple(radices, s));
  return out;
}

std::vector<Assignment> ParetoEfficient(const PayoffGame& game) {
  std::vector<int> radices = DomainSizes(game.players);
  CheckSpace(radices, "pareto efficient profiles");
  struct Entry {
    Assignment profile;
    std::vector<SemiringValue> payoffs;
  };
  std::vector<Entry> frontier;
  Assignment s(radices.size(), 0);
  do {
    std::vector<SemiringValue> vec = PayoffVector(game, s);
    bool dominated = std::any_of(frontier.begin(), frontier.end(),
                                 [&](const Entry& e) {
      return CompareVectors(game, vec, e.payoffs) == PreferenceOrder::kWorse;
    });
    if (dominated) continue;
    std::erase_if(frontier, [&](const Entry& e) {
      return CompareVectors(game, vec, e.payoffs) == PreferenceOrder::kBetter;
    });
    frontier.push_back({s, std::move(vec)});
  } while (NextTuple(radices, s));
  std::vector<Assignment> out;
  for (Entry& e : frontier) out.push_back(std::move(e.profile));
  return out;
}

std::vector<int> BestResponses(const PayoffGame& game, int player,
                               const Assignment& profile) {
  ValidateAssignment(game.players, profile);
  Assignment probe = profile;
  std::vector<int> out;
  for (int s = 0; s < game.players[player].size(); ++s) {
    probe[player] = s;
    const SemiringValue& mine = Payoff(game, player, probe);
    bool beaten = false;
    Assignment other = profile;
    for (int t = 0; t < game.players[player].size() && !beaten; ++t) {
      other[player] = t;
      beaten = ComparePayoffs(game, Payoff(game, player, other), mine) ==
               PreferenceOrder::kBetter;
    }
    if (!beaten) out.push_back(s);
  }
  return out;
}

}  // namespace optiform
