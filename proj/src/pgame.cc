#include "optiform/pgame.h"

#include <algorithm>
#include <numeric>

namespace optiform {

void Validate(const PpGame& game) {
  if (game.players.empty()) throw ValidationError("game has no players");
  ValidateVariables(game.players, "player");
  if (game.prefs.size() != game.players.size()) {
    throw ValidationError("game: expected one preference table per player");
  }
  for (std::size_t i = 0; i < game.prefs.size(); ++i) {
    ValidateTable(game.players, static_cast<int>(i), game.prefs[i],
                  "preferences of player");
  }
}

int BestResponse(const PpGame& game, int player,
                 std::span<const int> neighbour_strategies) {
  const ConditionalTable& table = game.prefs[player];
  if (neighbour_strategies.size() != table.conditions.size()) {
    throw ValidationError("best response: expected " +
                          std::to_string(table.conditions.size()) +
                          " neighbour strategies");
  }
  std::vector<int> radices = Radices(game.players, table.conditions);
  for (std::size_t k = 0; k < radices.size(); ++k) {
    if (neighbour_strategies[k] < 0 || neighbour_strategies[k] >= radices[k]) {
      throw ValidationError("best response: strategy out of range for '" +
                            game.players[table.conditions[k]].name + "'");
    }
  }
  return table.rows[TupleIndex(radices, neighbour_strategies)].top();
}

int BestResponseTo(const PpGame& game, int player, const Assignment& profile) {
  ValidateAssignment(game.players, profile);
  return RowFor(game.players, game.prefs[player], profile).top();
}

bool IsNeverBestResponse(const PpGame& game, int player, int strategy) {
  const auto& rows = game.prefs[player].rows;
  return std::none_of(rows.begin(), rows.end(), [&](const StrictOrder& r) {
    return r.top() == strategy;
  });
}

bool IsStrictlyDominated(const PpGame& game, int player, int strategy) {
  auto dominated = DominatedValues(game.prefs[player],
                                   game.players[player].size());
  return std::find(dominated.begin(), dominated.end(), strategy) !=
         dominated.end();
}

ValueSets NeverBestResponses(const PpGame& game) {
  ValueSets out;
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    out.push_back(NeverTopValues(game.prefs[i], game.players[i].size()));
  }
  return out;
}

ValueSets StrictlyDominatedStrategies(const PpGame& game) {
  ValueSets out;
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    out.push_back(DominatedValues(game.prefs[i], game.players[i].size()));
  }
  return out;
}

std::vector<Assignment> NashEquilibria(const PpGame& game) {
  std::vector<int> radices = DomainSizes(game.players);
  CheckSpace(radices, "nash equilibria");
  std::vector<Assignment> out;
  Assignment s(radices.size(), 0);
  do {
    bool stable = true;
    for (int i = 0; stable && i < static_cast<int>(s.size()); ++i) {
      stable = RowFor(game.players, game.prefs[i], s).top() == s[i];
    }
    if (stable) out.push_back(s);
  } while (NextTuple(radices, s));
  return out;
}

PpGame Subgame(const PpGame& game, const ValueSets& removals) {
  PpGame out = game;
  RemoveValues(out.players, out.prefs, removals);
  return out;
}

namespace {

ValueSets Eligible(const PpGame& game, EliminationMode mode) {
  return mode == EliminationMode::kNeverBestResponse
             ? NeverBestResponses(game)
             : StrictlyDominatedStrategies(game);
}

bool AnyRemoval(const ValueSets& sets) {
  return std::any_of(sets.begin(), sets.end(),
                     [](const auto& s) { return !s.empty(); });
}

}  // namespace

PpGame ReducePp(const PpGame& game, EliminationMode mode) {
  ValueSets removals = Eligible(game, mode);
  if (!AnyRemoval(removals)) return game;
  return Subgame(game, removals);
}

GameElimination ReducePpFixpoint(const PpGame& game, EliminationMode mode) {
  GameElimination run{game, {}};
  for (;;) {
    ValueSets removals = Eligible(run.result, mode);
    if (!AnyRemoval(removals)) break;
    EliminationStep step;
    for (std::size_t i = 0; i < removals.size(); ++i) {
      step.removed.emplace_back();
      for (int v : removals[i]) {
        step.removed.back().push_back(run.result.players[i].domain[v]);
      }
    }
    run.result = Subgame(run.result, removals);
    run.steps.push_back(std::move(step));
  }
  return run;
}

namespace {

// Does the order of `player` change when only the neighbour at `pos` moves?
bool DependsOn(const PpGame& game, int player, std::size_t pos) {
  const ConditionalTable& table = game.prefs[player];
  std::vector<int> radices = Radices(game.players, table.conditions);
  std::vector<int> digits(radices.size(), 0);
  do {
    if (digits[pos] != 0) continue;
    const StrictOrder& base = table.rows[TupleIndex(radices, digits)];
    std::vector<int> probe = digits;
    for (int y = 1; y < radices[pos]; ++y) {
      probe[pos] = y;
      if (!(table.rows[TupleIndex(radices, probe)] == base)) return true;
    }
  } while (NextTuple(radices, digits));
  return false;
}

}  // namespace

Hierarchy AnalyzeHierarchy(const PpGame& game) {
  Hierarchy h;
  Digraph deps;
  deps.nodes.reserve(game.players.size());
  for (const Variable& p : game.players) deps.nodes.push_back(p.name);
  for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
    h.dependencies.emplace_back();
    const auto& neigh = game.neighbours(i);
    for (std::size_t pos = 0; pos < neigh.size(); ++pos) {
      if (DependsOn(game, i, pos)) {
        h.dependencies.back().push_back(neigh[pos]);
        deps.edges.emplace_back(neigh[pos], i);
      }
    }
  }
  if (auto levels = TopologicalLevels(deps)) {
    h.hierarchical = true;
    h.levels = std::move(*levels);
  }
  return h;
}

bool IsHierarchical(const PpGame& game) {
  return AnalyzeHierarchy(game).hierarchical;
}

PpGame TechGame(const Digraph& graph, int k) {
  if (k < 1) throw ValidationError("tech game needs at least one technology");
  Validate(graph);
  PpGame game;
  std::vector<std::string> techs;
  for (int t = 1; t <= k; ++t) techs.push_back("t" + std::to_string(t));
  for (const std::string& node : graph.nodes) {
    game.players.push_back({node, techs});
  }
  auto pred = graph.Predecessors();
  for (int i = 0; i < graph.size(); ++i) {
    ConditionalTable table;
    table.conditions = pred[i];
    std::vector<int> radices(pred[i].size(), k);
    CheckSpace(radices, "tech game preferences of '" + graph.nodes[i] + "'");
    std::vector<int> digits(pred[i].size(), 0);
    do {
      std::vector<int> count(k, 0);
      for (int d : digits) ++count[d];
      std::vector<int> ranking(k);
      std::iota(ranking.begin(), ranking.end(), 0);
      std::stable_sort(ranking.begin(), ranking.end(),
                       [&](int a, int b) { return count[a] > count[b]; });
      table.rows.emplace_back(std::move(ranking));
    } while (NextTuple(radices, digits));
    game.prefs.push_back(std::move(table));
  }
  return game;
}

bool LevelsWellStructured(const Digraph& graph, std::span<const int> levels) {
  if (static_cast<int>(levels.size()) != graph.size()) {
    throw ValidationError("levels: expected one level per node");
  }
  std::vector<int> lower(graph.size(), 0);
  std::vector<int> other(graph.size(), 0);
  for (auto [from, to] : graph.edges) {
    if (levels[from] < levels[to]) {
      ++lower[to];
    } else {
      ++other[to];
    }
  }
  for (int v = 0; v < graph.size(); ++v) {
    if (lower[v] < other[v]) return false;
  }
  return true;
}

std::optional<std::vector<int>> WellStructuredLevels(const Digraph& graph) {
  Validate(graph);
  const int n = graph.size();
  auto pred = graph.Predecessors();
  std::vector<int> level(n, -1);
  int placed = 0;
  for (int current = 0; placed < n; ++current) {
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      if (level[v] >= 0) continue;
      int from_placed = 0;
      for (int u : pred[v]) {
        if (level[u] >= 0) ++from_placed;
      }
      if (2 * from_placed >= static_cast<int>(pred[v].size())) {
        layer.push_back(v);
      }
    }
    if (layer.empty()) return std::nullopt;
    for (int v : layer) level[v] = current;
    placed += static_cast<int>(layer.size());
  }
  return level;
}

}  // namespace optiform
