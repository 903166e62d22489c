#include "optiform/bridge.h"

#include <algorithm>
#include <set>

namespace optiform {

PpGame GameOfCpnet(const CpNet& net) {
  Validate(net);
  return PpGame{net.variables, net.tables};
}

CpNet CpnetOfGame(const PpGame& game) {
  Validate(game);
  const int n = static_cast<int>(game.players.size());
  CpNet net{game.players, {}};
  for (int i = 0; i < n; ++i) {
    const ConditionalTable& prefs = game.prefs[i];
    ConditionalTable table;
    for (int j = 0; j < n; ++j) {
      if (j != i) table.conditions.push_back(j);
    }
    // Where each neighbour sits among the opponents.
    std::vector<std::size_t> where;
    for (int nb : prefs.conditions) {
      where.push_back(std::find(table.conditions.begin(),
                                table.conditions.end(), nb) -
                      table.conditions.begin());
    }
    std::vector<int> radices = Radices(game.players, table.conditions);
    std::vector<int> neighbour_radices =
        Radices(game.players, prefs.conditions);
    CheckSpace(radices, "parents of '" + game.players[i].name + "'");
    std::vector<int> digits(radices.size(), 0);
    std::vector<int> neighbour_digits(where.size());
    do {
      for (std::size_t k = 0; k < where.size(); ++k) {
        neighbour_digits[k] = digits[where[k]];
      }
      table.rows.push_back(
          prefs.rows[TupleIndex(neighbour_radices, neighbour_digits)]);
    } while (NextTuple(radices, digits));
    net.tables.push_back(std::move(table));
  }
  return net;
}

namespace {

void RequireLinear(const SoftCsp& problem, const char* map) {
  if (!problem.semiring.is_linear()) {
    throw ValidationError(std::string(map) + " needs a linearly ordered " +
                          "semiring, got " + problem.semiring.ToString());
  }
}

}  // namespace

PayoffGame LocalMap(const SoftCsp& problem) {
  Validate(problem);
  RequireLinear(problem, "local map");
  const int n = static_cast<int>(problem.variables.size());
  PayoffGame game{problem.semiring, problem.variables, {}, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<const SoftConstraint*> incident;
    std::set<int> neigh;
    for (const SoftConstraint& con : problem.constraints) {
      if (std::find(con.scope.begin(), con.scope.end(), i) == con.scope.end()) {
        continue;
      }
      incident.push_back(&con);
      for (int v : con.scope) {
        if (v != i) neigh.insert(v);
      }
    }
    game.neighbours.emplace_back(neigh.begin(), neigh.end());
    std::vector<int> scope = PayoffScope(game, i);
    std::vector<int> radices = Radices(problem.variables, scope);
    std::vector<int> digits(radices.size(), 0);
    Assignment full(n, 0);
    std::vector<SemiringValue> table;
    do {
      for (std::size_t k = 0; k < scope.size(); ++k) full[scope[k]] = digits[k];
      SemiringValue p = One(problem.semiring);
      for (const SoftConstraint* con : incident) {
        p = Combine(problem.semiring, p, TableValue(problem, *con, full));
      }
      table.push_back(std::move(p));
    } while (NextTuple(radices, digits));
    game.payoffs.push_back(std::move(table));
  }
  return game;
}

PayoffGame GlobalMap(const SoftCsp& problem) {
  Validate(problem);
  RequireLinear(problem, "global map");
  const int n = static_cast<int>(problem.variables.size());
  std::vector<int> radices = DomainSizes(problem.variables);
  CheckSpace(radices, "global map");
  std::vector<SemiringValue> table;
  Assignment a(n, 0);
  do {
    table.push_back(SolutionPreference(problem, a));
  } while (NextTuple(radices, a));
  PayoffGame game{problem.semiring, problem.variables, {}, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    game.neighbours.push_back(std::move(others));
    game.payoffs.push_back(table);
  }
  return game;
}

namespace {

bool IsWeighted(const std::optional<SemiringSpec>& carrier) {
  return carrier && carrier->kind() == SemiringSpec::Kind::kWeighted;
}

Rational NumericPayoff(const SemiringValue& v) {
  if (v.is_bool()) return Rational(v.as_bool() ? 1 : 0);
  return v.as_number();
}

}  // namespace

SemiringValue OrderPreservingMap::Apply(const SemiringValue& payoff) const {
  if (IsWeighted(source)) return payoff;
  return SemiringValue::Number(offset - NumericPayoff(payoff));
}

OrderPreservingMap MakeOrderPreservingMap(const PayoffGame& game,
                                          std::optional<Rational> offset) {
  Validate(game);
  if (IsWeighted(game.carrier)) {
    if (offset) {
      throw ValidationError(
          "offset cannot be applied to weighted payoffs, which already are "
          "costs");
    }
    return {game.carrier, Rational(0)};
  }
  std::optional<Rational> max;
  for (const auto& table : game.payoffs) {
    for (const SemiringValue& v : table) {
      Rational q = NumericPayoff(v);
      if (!max || *max < q) max = q;
    }
  }
  if (offset && *offset < *max) {
    throw ValidationError("offset " + FormatRational(*offset) +
                          " is below the payoff " + FormatRational(*max));
  }
  return {game.carrier, offset ? *offset : *max};
}

SoftCsp ScspOfGame(const PayoffGame& game, std::optional<Rational> offset) {
  OrderPreservingMap f = MakeOrderPreservingMap(game, offset);
  const int n = static_cast<int>(game.players.size());
  SoftCsp csp{SemiringSpec::Product(std::vector<SemiringSpec>(
                  n, SemiringSpec::Weighted())),
              game.players,
              {}};
  for (int i = 0; i < n; ++i) {
    SoftConstraint con{PayoffScope(game, i), {}};
    for (const SemiringValue& p : game.payoffs[i]) {
      std::vector<SemiringValue> items(n, SemiringValue::Number(0));
      items[i] = f.Apply(p);
      con.table.push_back(SemiringValue::Tuple(std::move(items)));
    }
    csp.constraints.push_back(std::move(con));
  }
  return csp;
}

SoftCsp RegretConstraints(const PayoffGame& game) {
  Validate(game);
  const int n = static_cast<int>(game.players.size());
  SoftCsp csp{SemiringSpec::Boolean(), game.players, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<int> scope = PayoffScope(game, i);
    std::vector<int> radices = Radices(game.players, scope);
    const std::size_t own =
        std::find(scope.begin(), scope.end(), i) - scope.begin();
    const auto& payoffs = game.payoffs[i];
    SoftConstraint con{scope, {}};
    std::vector<int> digits(radices.size(), 0);
    do {
      const SemiringValue& mine = payoffs[TupleIndex(radices, digits)];
      std::vector<int> probe = digits;
      bool regret = false;
      for (int s = 0; s < radices[own] && !regret; ++s) {
        probe[own] = s;
        regret = ComparePayoffs(game, payoffs[TupleIndex(radices, probe)],
                                mine) == PreferenceOrder::kBetter;
      }
      con.table.push_back(SemiringValue::Bool(!regret));
    } while (NextTuple(radices, digits));
    csp.constraints.push_back(std::move(con));
  }
  return csp;
}

std::vector<Solution> ParetoNash(const PayoffGame& game,
                                 std::optional<Rational> offset) {
  SoftCsp joined = Join(ScspOfGame(game, offset), RegretConstraints(game));
  const SemiringValue zero = Zero(joined.semiring);
  std::vector<Solution> out = OptimalSolutions(joined);
  std::erase_if(out, [&](const Solution& s) { return s.preference == zero; });
  return out;
}

}  // namespace optiform
