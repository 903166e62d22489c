#include "optiform/oracle.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace optiform::oracle {

namespace {

// Every tuple over `radices` in lexicographic order.
std::vector<std::vector<int>> AllTuples(const std::vector<int>& radices,
                                        std::string_view what) {
  std::uint64_t total = 1;
  for (int r : radices) {
    total *= static_cast<std::uint64_t>(r);
    if (total > MaxSpace()) {
      throw BoundError(std::string(what) + ": space exceeds the bound of " +
                       std::to_string(MaxSpace()));
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(total);
  std::vector<int> t(radices.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(t);
    for (int pos = static_cast<int>(t.size()) - 1; pos >= 0; --pos) {
      if (++t[pos] < radices[pos]) break;
      t[pos] = 0;
    }
  }
  return out;
}

std::vector<int> Sizes(const std::vector<Variable>& vars) {
  std::vector<int> out;
  for (const Variable& v : vars) out.push_back(v.size());
  return out;
}

// Row-major index of `full` restricted to `positions`.
std::size_t IndexOf(const std::vector<Variable>& vars,
                    const std::vector<int>& positions, const Assignment& full) {
  std::size_t idx = 0;
  for (int p : positions) idx = idx * vars[p].size() + full[p];
  return idx;
}

const StrictOrder& Row(const std::vector<Variable>& vars,
                       const ConditionalTable& table, const Assignment& full) {
  return table.rows[IndexOf(vars, table.conditions, full)];
}

std::vector<int> Scope(const PayoffGame& game, int player) {
  std::vector<int> scope = game.neighbours[player];
  scope.insert(std::lower_bound(scope.begin(), scope.end(), player), player);
  return scope;
}

const SemiringValue& PayoffOf(const PayoffGame& game, int player,
                              const Assignment& s) {
  return game.payoffs[player][IndexOf(game.players, Scope(game, player), s)];
}

// a is strictly better than b on the game's scale.
bool Beats(const PayoffGame& game, const SemiringValue& a,
           const SemiringValue& b) {
  if (game.carrier) return Less(*game.carrier, b, a);
  return b.as_number() < a.as_number();
}

SemiringValue Evaluate(const SoftCsp& problem, const Assignment& a) {
  SemiringValue pref = One(problem.semiring);
  for (const SoftConstraint& con : problem.constraints) {
    pref = Combine(problem.semiring, pref,
                   con.table[IndexOf(problem.variables, con.scope, a)]);
  }
  return pref;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Assignment> BruteOptimalOutcomes(const CpNet& net) {
  std::vector<Assignment> out;
  for (const Assignment& o : AllTuples(Sizes(net.variables), "outcomes")) {
    bool optimal = true;
    for (std::size_t v = 0; optimal && v < net.variables.size(); ++v) {
      const StrictOrder& row = Row(net.variables, net.tables[v], o);
      for (int w = 0; w < net.variables[v].size(); ++w) {
        if (row.rank_of(w) < row.rank_of(o[v])) optimal = false;
      }
    }
    if (optimal) out.push_back(o);
  }
  return out;
}

std::vector<std::pair<Assignment, Assignment>> BruteFlipEdges(
    const CpNet& net) {
  std::vector<std::pair<Assignment, Assignment>> out;
  for (const Assignment& o : AllTuples(Sizes(net.variables), "outcomes")) {
    for (std::size_t v = 0; v < net.variables.size(); ++v) {
      const StrictOrder& row = Row(net.variables, net.tables[v], o);
      for (int w = 0; w < net.variables[v].size(); ++w) {
        if (row.rank_of(w) < row.rank_of(o[v])) {
          Assignment better = o;
          better[v] = w;
          out.emplace_back(o, std::move(better));
        }
      }
    }
  }
  return out;
}

bool BruteDominates(const CpNet& net, const Assignment& better,
                    const Assignment& worse) {
  std::set<Assignment> seen;
  std::vector<Assignment> stack{better};
  while (!stack.empty()) {
    Assignment o = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < net.variables.size(); ++v) {
      const StrictOrder& row = Row(net.variables, net.tables[v], o);
      for (int w = 0; w < net.variables[v].size(); ++w) {
        if (row.rank_of(w) <= row.rank_of(o[v])) continue;
        Assignment next = o;
        next[v] = w;
        if (next == worse) return true;
        if (seen.insert(next).second) stack.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::vector<Assignment> BruteNash(const PpGame& game) {
  std::vector<Assignment> out;
  for (const Assignment& s : AllTuples(Sizes(game.players), "profiles")) {
    bool nash = true;
    for (std::size_t i = 0; nash && i < game.players.size(); ++i) {
      const StrictOrder& row = Row(game.players, game.prefs[i], s);
      for (int t = 0; t < game.players[i].size(); ++t) {
        if (t != s[i] && !row.Prefers(s[i], t)) nash = false;
      }
    }
    if (nash) out.push_back(s);
  }
  return out;
}

std::vector<Assignment> BruteNash(const PayoffGame& game) {
  std::vector<Assignment> out;
  for (const Assignment& s : AllTuples(Sizes(game.players), "profiles")) {
    bool nash = true;
    for (std::size_t i = 0; nash && i < game.players.size(); ++i) {
      Assignment dev = s;
      for (int t = 0; nash && t < game.players[i].size(); ++t) {
        dev[i] = t;
        if (Beats(game, PayoffOf(game, i, dev), PayoffOf(game, i, s))) {
          nash = false;
        }
      }
    }
    if (nash) out.push_back(s);
  }
  return out;
}

namespace {

// a <_P b.
bool ParetoBelow(const PayoffGame& game, const Assignment& a,
                 const Assignment& b) {
  bool strict = false;
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    const SemiringValue& pa = PayoffOf(game, i, a);
    const SemiringValue& pb = PayoffOf(game, i, b);
    if (Beats(game, pa, pb)) return false;
    if (Beats(game, pb, pa)) strict = true;
  }
  return strict;
}

std::vector<Assignment> ParetoMaximal(const PayoffGame& game,
                                      const std::vector<Assignment>& set) {
  std::vector<Assignment> out;
  for (const Assignment& a : set) {
    bool maximal = std::none_of(set.begin(), set.end(), [&](const auto& b) {
      return ParetoBelow(game, a, b);
    });
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<Assignment> BrutePareto(const PayoffGame& game) {
  return ParetoMaximal(game, AllTuples(Sizes(game.players), "profiles"));
}

std::vector<Solution> BruteOptimalSolutions(const SoftCsp& problem) {
  auto all = AllTuples(Sizes(problem.variables), "assignments");
  std::vector<SemiringValue> prefs;
  for (const Assignment& a : all) prefs.push_back(Evaluate(problem, a));
  std::vector<Solution> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; maximal && j < all.size(); ++j) {
      if (Less(problem.semiring, prefs[i], prefs[j])) maximal = false;
    }
    if (maximal) out.push_back({all[i], prefs[i]});
  }
  return out;
}

std::vector<Assignment> BrutePerfectSolutions(const SoftCsp& problem) {
  const SemiringValue one = One(problem.semiring);
  std::vector<Assignment> out;
  for (const Assignment& a :
       AllTuples(Sizes(problem.variables), "assignments")) {
    if (Evaluate(problem, a) == one) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<int>> BruteDependencies(const PpGame& game) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    const ConditionalTable& table = game.prefs[i];
    std::vector<int> radices;
    for (int c : table.conditions) radices.push_back(game.players[c].size());
    auto tuples = AllTuples(radices, "neighbour profiles");
    out.emplace_back();
    for (std::size_t pos = 0; pos < table.conditions.size(); ++pos) {
      bool depends = false;
      for (std::size_t a = 0; !depends && a < tuples.size(); ++a) {
        for (std::size_t b = 0; !depends && b < tuples.size(); ++b) {
          bool differ_only_here = true;
          for (std::size_t k = 0; k < radices.size(); ++k) {
            if (k != pos && tuples[a][k] != tuples[b][k]) {
              differ_only_here = false;
            }
          }
          depends = differ_only_here && !(table.rows[a] == table.rows[b]);
        }
      }
      if (depends) out.back().push_back(table.conditions[pos]);
    }
  }
  return out;
}

bool BruteHierarchical(const PpGame& game) {
  auto deps = BruteDependencies(game);
  const int n = static_cast<int>(deps.size());
  // 0 unvisited, 1 on the stack, 2 done.
  std::vector<int> state(n, 0);
  std::function<bool(int)> cyclic = [&](int v) {
    state[v] = 1;
    for (int u : deps[v]) {
      if (state[u] == 1) return true;
      if (state[u] == 0 && cyclic(u)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0 && cyclic(v)) return false;
  }
  return true;
}

WellStructuredSearch BruteWellStructured(const Digraph& graph, int node_limit,
                                         std::uint64_t budget) {
  const int n = graph.size();
  WellStructuredSearch result;
  if (n > node_limit) return result;
  std::vector<std::vector<int>> pred(n);
  for (auto [from, to] : graph.edges) pred[to].push_back(from);
  // A node's condition can be checked once it and its predecessors have
  // levels, i.e. after assigning the largest index among them.
  std::vector<std::vector<int>> check_at(n);
  for (int v = 0; v < n; ++v) {
    int last = v;
    for (int u : pred[v]) last = std::max(last, u);
    check_at[last].push_back(v);
  }
  std::vector<int> level(n, 0);
  std::uint64_t visits = 0;
  bool exhausted = false;
  std::function<bool(int)> search = [&](int v) {
    if (v == n) return true;
    for (int l = 0; l < n; ++l) {
      if (++visits > budget) {
        exhausted = true;
        return false;
      }
      level[v] = l;
      bool ok = true;
      for (int w : check_at[v]) {
        int lower = 0;
        for (int u : pred[w]) {
          if (level[u] < level[w]) ++lower;
        }
        if (2 * lower < static_cast<int>(pred[w].size())) ok = false;
      }
      if (ok && search(v + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  };
  if (search(0)) {
    result.answer = Answer::kYes;
    result.levels = level;
  } else if (!exhausted) {
    result.answer = Answer::kNo;
  }
  return result;
}

// ---------------------------------------------------------------------------

int Rng::Uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

bool Rng::Chance(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

std::vector<int> Rng::Permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[Uniform(0, i)]);
  return p;
}

namespace {

std::vector<Variable> RandomVariables(Rng& rng, const GeneratorConfig& cfg,
                                      const char* prefix) {
  const int n = rng.Uniform(cfg.min_vars, cfg.max_vars);
  std::vector<Variable> vars;
  for (int i = 0; i < n; ++i) {
    Variable v{prefix + std::to_string(i + 1), {}};
    const int d = rng.Uniform(cfg.min_domain, cfg.max_domain);
    for (int k = 0; k < d; ++k) {
      v.domain.push_back(std::string(1, static_cast<char>('a' + i)) +
                         std::to_string(k));
    }
    vars.push_back(std::move(v));
  }
  return vars;
}

StrictOrder RandomOrder(Rng& rng, int size) {
  return StrictOrder(rng.Permutation(size));
}

// Random rows over `conditions`; positions drawn as redundant are ignored by
// copying the row found with those positions at value 0.
ConditionalTable RandomTable(Rng& rng, const GeneratorConfig& cfg,
                             const std::vector<Variable>& vars, int owner,
                             std::vector<int> conditions) {
  std::sort(conditions.begin(), conditions.end());
  std::vector<int> radices;
  std::vector<bool> redundant;
  for (int c : conditions) {
    radices.push_back(vars[c].size());
    redundant.push_back(rng.Chance(cfg.redundancy));
  }
  ConditionalTable table{conditions, {}};
  auto tuples = AllTuples(radices, "table rows");
  for (const auto& t : tuples) {
    std::vector<int> base = t;
    bool copy = false;
    for (std::size_t k = 0; k < base.size(); ++k) {
      if (redundant[k] && base[k] != 0) {
        base[k] = 0;
        copy = true;
      }
    }
    if (copy) {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < base.size(); ++k) {
        idx = idx * radices[k] + base[k];
      }
      table.rows.push_back(table.rows[idx]);
    } else {
      table.rows.push_back(RandomOrder(rng, vars[owner].size()));
    }
  }
  return table;
}

SemiringValue RandomValue(Rng& rng, const GeneratorConfig& cfg,
                          const SemiringSpec& spec) {
  switch (spec.kind()) {
    case SemiringSpec::Kind::kBoolean:
      return SemiringValue::Bool(rng.Chance(0.6));
    case SemiringSpec::Kind::kFuzzy:
      return SemiringValue::Number(rng.Uniform(0, 10), 10);
    case SemiringSpec::Kind::kWeighted:
      return SemiringValue::Number(rng.Uniform(0, cfg.max_payoff));
    case SemiringSpec::Kind::kProduct: {
      std::vector<SemiringValue> items;
      for (const SemiringSpec& f : spec.factors()) {
        items.push_back(RandomValue(rng, cfg, f));
      }
      return SemiringValue::Tuple(std::move(items));
    }
  }
  return {};
}

// Widens every neighbourhood to all opponents without changing any order.
PpGame WidenNeighbourhoods(const PpGame& game) {
  const int n = static_cast<int>(game.players.size());
  PpGame out{game.players, {}};
  for (int i = 0; i < n; ++i) {
    ConditionalTable table;
    std::vector<int> radices;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      table.conditions.push_back(j);
      radices.push_back(game.players[j].size());
    }
    for (const auto& t : AllTuples(radices, "opponent profiles")) {
      Assignment full(n, 0);
      for (std::size_t k = 0; k < t.size(); ++k) {
        full[table.conditions[k]] = t[k];
      }
      table.rows.push_back(Row(game.players, game.prefs[i], full));
    }
    out.prefs.push_back(std::move(table));
  }
  return out;
}

}  // namespace

CpNet RandomCpnet(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  CpNet net{RandomVariables(rng, cfg, "X"), {}};
  const int n = static_cast<int>(net.variables.size());
  std::vector<int> order = rng.Permutation(n);
  std::vector<int> position(n);
  for (int k = 0; k < n; ++k) position[order[k]] = k;
  for (int i = 0; i < n; ++i) {
    std::vector<int> parents;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (cfg.acyclic && position[j] > position[i]) continue;
      if (rng.Chance(cfg.edge_density)) parents.push_back(j);
    }
    net.tables.push_back(RandomTable(rng, cfg, net.variables, i, parents));
  }
  return net;
}

SoftCsp RandomScsp(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  SemiringSpec spec = cfg.carrier.value_or(SemiringSpec::Fuzzy());
  SoftCsp csp{spec, RandomVariables(rng, cfg, "x"), {}};
  const int n = static_cast<int>(csp.variables.size());
  Assignment planted;
  for (const Variable& v : csp.variables) {
    planted.push_back(rng.Uniform(0, v.size() - 1));
  }
  const int count = rng.Uniform(1, n + 1);
  for (int c = 0; c < count; ++c) {
    const int arity = rng.Uniform(1, std::min(cfg.max_scope, n));
    std::vector<int> perm = rng.Permutation(n);
    SoftConstraint con{std::vector<int>(perm.begin(), perm.begin() + arity),
                       {}};
    std::vector<int> radices;
    for (int v : con.scope) radices.push_back(csp.variables[v].size());
    for (const auto& t : AllTuples(radices, "constraint table")) {
      SemiringValue value = RandomValue(rng, cfg, spec);
      if (cfg.consistent && spec.kind() == SemiringSpec::Kind::kBoolean) {
        bool matches = true;
        for (std::size_t k = 0; k < t.size(); ++k) {
          if (t[k] != planted[con.scope[k]]) matches = false;
        }
        if (matches) value = SemiringValue::Bool(true);
      }
      con.table.push_back(std::move(value));
    }
    csp.constraints.push_back(std::move(con));
  }
  return csp;
}

PayoffGame RandomPayoffGame(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  PayoffGame game{cfg.carrier, RandomVariables(rng, cfg, "p"), {}, {}};
  const int n = static_cast<int>(game.players.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> neigh;
    for (int j = 0; j < n; ++j) {
      if (j != i && rng.Chance(cfg.edge_density)) neigh.push_back(j);
    }
    game.neighbours.push_back(std::move(neigh));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> radices;
    for (int v : Scope(game, i)) radices.push_back(game.players[v].size());
    std::vector<SemiringValue> table;
    for (std::size_t k = 0; k < SpaceSize(radices); ++k) {
      table.push_back(cfg.carrier
                          ? RandomValue(rng, cfg, *cfg.carrier)
                          : SemiringValue::Number(
                                rng.Uniform(0, cfg.max_payoff)));
    }
    game.payoffs.push_back(std::move(table));
  }
  return game;
}

PpGame RandomPpGame(const GeneratorConfig& cfg) {
  if (cfg.hierarchical) {
    GeneratorConfig acyclic = cfg;
    acyclic.acyclic = true;
    CpNet net = RandomCpnet(acyclic);
    return WidenNeighbourhoods(PpGame{net.variables, net.tables});
  }
  Rng rng(cfg.seed);
  PpGame game{RandomVariables(rng, cfg, "p"), {}};
  const int n = static_cast<int>(game.players.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> neigh;
    for (int j = 0; j < n; ++j) {
      if (j != i && rng.Chance(cfg.edge_density)) neigh.push_back(j);
    }
    game.prefs.push_back(RandomTable(rng, cfg, game.players, i, neigh));
  }
  return game;
}

Digraph RandomDag(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  const int n = rng.Uniform(cfg.min_vars, cfg.max_vars);
  Digraph g;
  for (int i = 0; i < n; ++i) g.nodes.push_back("n" + std::to_string(i + 1));
  std::vector<int> order = rng.Permutation(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.Chance(cfg.edge_density)) g.edges.emplace_back(order[a], order[b]);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace {

using LabelSet = std::vector<std::vector<std::string>>;

LabelSet ToLabels(const std::vector<Variable>& vars,
                  const std::vector<Assignment>& set) {
  LabelSet out;
  for (const Assignment& a : set) out.push_back(Labels(vars, a));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Show(const LabelSet& set) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << " ";
    for (std::size_t k = 0; k < set[i].size(); ++k) {
      os << (k ? "," : "") << set[i][k];
    }
  }
  os << "}";
  return os.str();
}

std::vector<Assignment> Intersect(std::vector<Assignment> a,
                                  std::vector<Assignment> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Assignment> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Assignment> Assignments(const std::vector<Solution>& sols) {
  std::vector<Assignment> out;
  for (const Solution& s : sols) out.push_back(s.assignment);
  return out;
}

Verdict Pass() { return {Outcome::kPass, ""}; }
Verdict Skip(std::string why) { return {Outcome::kSkipped, std::move(why)}; }
Verdict Fail(std::string why) { return {Outcome::kFail, std::move(why)}; }

Verdict SameSets(const std::string& what, const LabelSet& lhs,
                 const LabelSet& rhs) {
  if (lhs == rhs) return Pass();
  return Fail(what + ": " + Show(lhs) + " vs " + Show(rhs));
}

bool AllSingletons(const std::vector<Variable>& vars) {
  return std::all_of(vars.begin(), vars.end(),
                     [](const Variable& v) { return v.size() == 1; });
}

Assignment ZeroProfile(const std::vector<Variable>& vars) {
  return Assignment(vars.size(), 0);
}

// Same order for every player and every full profile.
bool SamePreferences(const std::vector<Variable>& vars,
                     const std::vector<ConditionalTable>& a,
                     const std::vector<ConditionalTable>& b) {
  for (const Assignment& s : AllTuples(Sizes(vars), "profiles")) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!(Row(vars, a[i], s) == Row(vars, b[i], s))) return false;
    }
  }
  return true;
}

// Labels present in `before` but not in `after`, per variable.
std::vector<std::vector<int>> RemovedIndices(
    const std::vector<Variable>& before, const std::vector<Variable>& after) {
  std::vector<std::vector<int>> out(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    for (int v = 0; v < before[i].size(); ++v) {
      const auto& d = after[i].domain;
      if (std::find(d.begin(), d.end(), before[i].domain[v]) == d.end()) {
        out[i].push_back(v);
      }
    }
  }
  return out;
}

// Is every removed value eligible in `tables` under `mode`?
std::string IllegalRemoval(const std::vector<Variable>& vars,
                           const std::vector<ConditionalTable>& tables,
                           const std::vector<std::vector<int>>& removed,
                           EliminationMode mode) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& rows = tables[i].rows;
    for (int v : removed[i]) {
      bool ok;
      if (mode == EliminationMode::kNeverBestResponse) {
        ok = std::none_of(rows.begin(), rows.end(),
                          [&](const StrictOrder& r) { return r.top() == v; });
      } else {
        ok = false;
        for (int w = 0; w < vars[i].size() && !ok; ++w) {
          ok = w != v && std::all_of(rows.begin(), rows.end(),
                                     [&](const StrictOrder& r) {
                                       return r.Prefers(w, v);
                                     });
        }
      }
      if (!ok) {
        return "value " + vars[i].domain[v] + " of " + vars[i].name +
               " was removed without being eligible";
      }
    }
  }
  return "";
}

const char* ModeName(EliminationMode mode) {
  return mode == EliminationMode::kNeverBestResponse ? "nbr" : "s";
}

constexpr EliminationMode kModes[] = {EliminationMode::kNeverBestResponse,
                                      EliminationMode::kStrictlyDominated};

template <typename T>
const T& As(std::string_view id, const Instance& instance) {
  if (const T* p = std::get_if<T>(&instance)) return *p;
  throw ValidationError("theorem '" + std::string(id) +
                        "' got the wrong kind of instance");
}

Verdict GofN(const CpNet& net) {
  PpGame game = GameOfCpnet(net);
  return SameSets("optimal outcomes vs nash equilibria of the game",
                  ToLabels(net.variables, BruteOptimalOutcomes(net)),
                  ToLabels(game.players, BruteNash(game)));
}

Verdict NofG(const PpGame& game) {
  CpNet net = CpnetOfGame(game);
  Verdict v = SameSets("nash equilibria vs optimal outcomes of the net",
                       ToLabels(game.players, BruteNash(game)),
                       ToLabels(net.variables, BruteOptimalOutcomes(net)));
  if (v.outcome != Outcome::kPass) return v;
  PpGame back = GameOfCpnet(net);
  if (!SamePreferences(game.players, game.prefs, back.prefs)) {
    return Fail("the game of the net differs from the game");
  }
  return Pass();
}

Verdict Reduced(const CpNet& net) {
  CpNet r = Reduce(net);
  PpGame as_game{r.variables, r.tables};
  if (BruteDependencies(as_game) !=
      [&] {
        std::vector<std::vector<int>> c;
        for (const auto& t : r.tables) c.push_back(t.conditions);
        return c;
      }()) {
    return Fail("reduced net still has a redundant parent");
  }
  if (BruteFlipEdges(net) != BruteFlipEdges(r)) {
    return Fail("reduction changed the flip relation");
  }
  if (!SamePreferences(net.variables, GameOfCpnet(net).prefs,
                       GameOfCpnet(r).prefs)) {
    return Fail("reduction changed the game of the net");
  }
  if (!(Reduce(CpnetOfGame(GameOfCpnet(r))) == r)) {
    return Fail("reducing the net of the game of r(N) does not give r(N)");
  }
  return Pass();
}

Verdict NbrGame(const PpGame& game) {
  for (EliminationMode mode : kModes) {
    PpGame cur = game;
    for (;;) {
      PpGame next = ReducePp(cur, mode);
      if (next == cur) break;
      std::string bad = IllegalRemoval(
          cur.players, cur.prefs, RemovedIndices(cur.players, next.players),
          mode);
      if (!bad.empty()) return Fail(std::string(ModeName(mode)) + ": " + bad);
      Verdict v = SameSets(std::string(ModeName(mode)) + " round",
                           ToLabels(cur.players, BruteNash(cur)),
                           ToLabels(next.players, BruteNash(next)));
      if (v.outcome != Outcome::kPass) return v;
      cur = std::move(next);
    }
  }
  return Pass();
}

Verdict NbrNet(const CpNet& net) {
  for (EliminationMode mode : kModes) {
    CpNet cur = net;
    for (;;) {
      ValueSets removals = mode == EliminationMode::kNeverBestResponse
                               ? NbrElements(cur)
                               : DominatedElements(cur);
      if (std::all_of(removals.begin(), removals.end(),
                      [](const auto& s) { return s.empty(); })) {
        break;
      }
      CpNet next = Eliminate(cur, removals);
      std::string bad = IllegalRemoval(
          cur.variables, cur.tables,
          RemovedIndices(cur.variables, next.variables), mode);
      if (!bad.empty()) return Fail(std::string(ModeName(mode)) + ": " + bad);
      Verdict v = SameSets(std::string(ModeName(mode)) + " round",
                           ToLabels(cur.variables, BruteOptimalOutcomes(cur)),
                           ToLabels(next.variables, BruteOptimalOutcomes(next)));
      if (v.outcome != Outcome::kPass) return v;
      cur = std::move(next);
    }
  }
  return Pass();
}

Verdict Ienbr(const PpGame& game) {
  for (EliminationMode mode : kModes) {
    PpGame fix = ReducePpFixpoint(game, mode).result;
    LabelSet before = ToLabels(game.players, BruteNash(game));
    Verdict v = SameSets(std::string(ModeName(mode)) + " fixpoint", before,
                         ToLabels(fix.players, BruteNash(fix)));
    if (v.outcome != Outcome::kPass) return v;
    if (AllSingletons(fix.players)) {
      v = SameSets(std::string(ModeName(mode)) + " singleton fixpoint", before,
                   ToLabels(fix.players, {ZeroProfile(fix.players)}));
      if (v.outcome != Outcome::kPass) return v;
    }
  }
  return Pass();
}

Verdict NetsIenbr(const CpNet& net) {
  for (EliminationMode mode : kModes) {
    CpNet fix = ReduceToFixpoint(net, mode).result;
    LabelSet before = ToLabels(net.variables, BruteOptimalOutcomes(net));
    Verdict v = SameSets(std::string(ModeName(mode)) + " fixpoint", before,
                         ToLabels(fix.variables, BruteOptimalOutcomes(fix)));
    if (v.outcome != Outcome::kPass) return v;
    if (AllSingletons(fix.variables)) {
      v = SameSets(std::string(ModeName(mode)) + " singleton fixpoint", before,
                   ToLabels(fix.variables, {ZeroProfile(fix.variables)}));
      if (v.outcome != Outcome::kPass) return v;
    }
  }
  return Pass();
}

bool BruteAcyclic(const CpNet& net) {
  std::vector<int> order;
  std::vector<bool> placed(net.variables.size(), false);
  for (std::size_t round = 0; round < net.variables.size(); ++round) {
    bool progress = false;
    for (std::size_t v = 0; v < net.variables.size(); ++v) {
      if (placed[v]) continue;
      const auto& pa = net.tables[v].conditions;
      if (std::all_of(pa.begin(), pa.end(), [&](int p) { return placed[p]; })) {
        placed[v] = true;
        progress = true;
      }
    }
    if (!progress) break;
  }
  return std::all_of(placed.begin(), placed.end(), [](bool b) { return b; });
}

Verdict Acyclic(const CpNet& net) {
  if (!BruteAcyclic(net)) return Skip("net is cyclic");
  CpNet fix = ReduceToFixpoint(net, EliminationMode::kNeverBestResponse).result;
  if (!AllSingletons(fix.variables)) {
    return Fail("nbr fixpoint of an acyclic net has a non-singleton domain");
  }
  LabelSet single = ToLabels(fix.variables, {ZeroProfile(fix.variables)});
  Verdict v = SameSets("fixpoint vs sweep", single,
                       ToLabels(net.variables, {SweepOptimal(net)}));
  if (v.outcome != Outcome::kPass) return v;
  return SameSets("fixpoint vs optimal outcomes", single,
                  ToLabels(net.variables, BruteOptimalOutcomes(net)));
}

Verdict Acyclic1(const PpGame& game) {
  if (!BruteHierarchical(game)) return Skip("game is not hierarchical");
  PpGame fix =
      ReducePpFixpoint(game, EliminationMode::kNeverBestResponse).result;
  if (!AllSingletons(fix.players)) {
    return Fail("nbr fixpoint of a hierarchical game is not a single profile");
  }
  return SameSets("fixpoint vs nash equilibria",
                  ToLabels(fix.players, {ZeroProfile(fix.players)}),
                  ToLabels(game.players, BruteNash(game)));
}

constexpr std::uint64_t kTechNashSpace = 20'000;

Verdict Acyclic2(const Digraph& graph) {
  if (!IsAcyclic(graph)) {
    WellStructuredSearch ws = BruteWellStructured(graph);
    if (ws.answer == Answer::kNo) return Skip("graph is not well-structured");
    if (ws.answer == Answer::kUnknown) {
      return Skip("well-structuredness undecided within the search limit");
    }
  }
  for (int k = 1; k <= 3; ++k) {
    PpGame game = TechGame(graph, k);
    PpGame fix =
        ReducePpFixpoint(game, EliminationMode::kNeverBestResponse).result;
    for (const Variable& p : fix.players) {
      if (p.domain != std::vector<std::string>{"t1"}) {
        return Fail("k=" + std::to_string(k) + ": player " + p.name +
                    " keeps strategies other than exactly t1");
      }
    }
    std::vector<int> radices = Sizes(game.players);
    if (SpaceSize(radices) <= kTechNashSpace) {
      auto nash = BruteNash(game);
      if (nash != std::vector<Assignment>{ZeroProfile(game.players)}) {
        return Fail("k=" + std::to_string(k) +
                    ": all-t1 is not the unique equilibrium, got " +
                    Show(ToLabels(game.players, nash)));
      }
    }
  }
  return Pass();
}

bool HasInfinity(const SoftCsp& problem) {
  for (const SoftConstraint& con : problem.constraints) {
    for (const SemiringValue& v : con.table) {
      if (v.is_infinity()) return true;
    }
  }
  return false;
}

// Part (i): optimal solutions are equilibria of L(P). Part (ii): they are
// Pareto efficient.
Verdict StrictMonotoneInclusion(const SoftCsp& problem, bool nash_part,
                                bool pareto_part) {
  if (!IsStrictlyMonotonic(problem.semiring)) {
    return Skip("combination of " + problem.semiring.ToString() +
                " is not strictly monotonic");
  }
  if (HasInfinity(problem)) {
    return Skip("infinite costs break strict monotonicity");
  }
  PayoffGame game = LocalMap(problem);
  auto nash = BruteNash(game);
  auto pareto = BrutePareto(game);
  for (const Solution& s : BruteOptimalSolutions(problem)) {
    std::string who = DescribeAssignment(problem.variables, s.assignment);
    if (nash_part &&
        std::find(nash.begin(), nash.end(), s.assignment) == nash.end()) {
      return Fail("optimal " + who + " is not a nash equilibrium");
    }
    if (pareto_part &&
        std::find(pareto.begin(), pareto.end(), s.assignment) == pareto.end()) {
      return Fail("optimal " + who + " is not pareto efficient");
    }
  }
  return Pass();
}

Verdict Csp(const SoftCsp& problem) {
  if (problem.semiring.kind() != SemiringSpec::Kind::kBoolean) {
    return Skip("not a classical csp");
  }
  auto solutions = BrutePerfectSolutions(problem);
  if (solutions.empty()) return Skip("csp is inconsistent");
  PayoffGame game = LocalMap(problem);
  return SameSets("solutions vs nash and pareto of the local game",
                  ToLabels(problem.variables, solutions),
                  ToLabels(game.players,
                           Intersect(BruteNash(game), BrutePareto(game))));
}

Verdict Thm10(const SoftCsp& problem) {
  if (!problem.semiring.is_linear()) return Skip("carrier is not linear");
  PayoffGame game = GlobalMap(problem);
  return SameSets(
      "optimal solutions vs nash and pareto of the global game",
      ToLabels(problem.variables,
               Assignments(BruteOptimalSolutions(problem))),
      ToLabels(game.players, Intersect(BruteNash(game), BrutePareto(game))));
}

Verdict T1(const PayoffGame& game) {
  SoftCsp csp = ScspOfGame(game);
  return SameSets("optimal solutions vs pareto efficient profiles",
                  ToLabels(csp.variables,
                           Assignments(BruteOptimalSolutions(csp))),
                  ToLabels(game.players, BrutePareto(game)));
}

Verdict RegretNash(const PayoffGame& game) {
  SoftCsp hard = RegretConstraints(game);
  return SameSets("no-regret solutions vs nash equilibria",
                  ToLabels(hard.variables, BrutePerfectSolutions(hard)),
                  ToLabels(game.players, BruteNash(game)));
}

Verdict ParetoNashCheck(const PayoffGame& game) {
  return SameSets("pipeline vs pareto maximal equilibria",
                  ToLabels(game.players, Assignments(ParetoNash(game))),
                  ToLabels(game.players,
                           ParetoMaximal(game, BruteNash(game))));
}

}  // namespace

const std::vector<std::string>& TheoremIds() {
  static const std::vector<std::string> ids = {
      "G_of_N",
      "N_of_G",
      "reduced",
      "nbr_game",
      "nbr_net",
      "ienbr",
      "nets_ienbr",
      "acyclic",
      "acyclic1",
      "acyclic2",
      "strict_monotone_inclusion",
      "strict_monotone_nash",
      "strict_monotone_pareto",
      "csp",
      "thm10",
      "t1",
      "regret_nash",
      "pareto_nash"};
  return ids;
}

namespace {

void RequireKnown(std::string_view id) {
  const auto& ids = TheoremIds();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw ValidationError("unknown theorem id '" + std::string(id) + "'");
  }
}

}  // namespace

GeneratorConfig TheoremConfig(std::string_view id, std::uint64_t seed) {
  RequireKnown(id);
  GeneratorConfig cfg;
  cfg.seed = seed;
  if (id == "reduced") cfg.redundancy = 0.4;
  if (id == "acyclic") cfg.acyclic = true;
  if (id == "acyclic1") {
    cfg.hierarchical = true;
    cfg.redundancy = 0.2;
  }
  if (id == "nbr_game" || id == "ienbr" || id == "N_of_G") {
    cfg.edge_density = 0.6;
  }
  if (id == "acyclic2") {
    cfg.max_vars = 10;
    cfg.edge_density = 0.4;
  }
  if (id.starts_with("strict_monotone")) cfg.carrier = SemiringSpec::Weighted();
  if (id == "csp") {
    cfg.carrier = SemiringSpec::Boolean();
    cfg.consistent = true;
  }
  if (id == "thm10") {
    const SemiringSpec carriers[] = {SemiringSpec::Fuzzy(),
                                     SemiringSpec::Weighted(),
                                     SemiringSpec::Boolean()};
    cfg.carrier = carriers[seed % 3];
  }
  if (id == "regret_nash" && seed % 2 == 1) {
    cfg.carrier = SemiringSpec::Fuzzy();
  }
  return cfg;
}

Instance GenerateInstance(std::string_view id, const GeneratorConfig& cfg) {
  RequireKnown(id);
  if (id == "G_of_N" || id == "reduced" || id == "nbr_net" ||
      id == "nets_ienbr" || id == "acyclic") {
    return RandomCpnet(cfg);
  }
  if (id == "N_of_G" || id == "nbr_game" || id == "ienbr" ||
      id == "acyclic1") {
    return RandomPpGame(cfg);
  }
  if (id == "acyclic2") return RandomDag(cfg);
  if (id.starts_with("strict_monotone") || id == "csp" || id == "thm10") {
    return RandomScsp(cfg);
  }
  return RandomPayoffGame(cfg);
}

Verdict CheckTheorem(std::string_view id, const Instance& instance) {
  RequireKnown(id);
  if (id == "G_of_N") return GofN(As<CpNet>(id, instance));
  if (id == "N_of_G") return NofG(As<PpGame>(id, instance));
  if (id == "reduced") return Reduced(As<CpNet>(id, instance));
  if (id == "nbr_game") return NbrGame(As<PpGame>(id, instance));
  if (id == "nbr_net") return NbrNet(As<CpNet>(id, instance));
  if (id == "ienbr") return Ienbr(As<PpGame>(id, instance));
  if (id == "nets_ienbr") return NetsIenbr(As<CpNet>(id, instance));
  if (id == "acyclic") return Acyclic(As<CpNet>(id, instance));
  if (id == "acyclic1") return Acyclic1(As<PpGame>(id, instance));
  if (id == "acyclic2") return Acyclic2(As<Digraph>(id, instance));
  if (id == "strict_monotone_inclusion") {
    return StrictMonotoneInclusion(As<SoftCsp>(id, instance), true, true);
  }
  if (id == "strict_monotone_nash") {
    return StrictMonotoneInclusion(As<SoftCsp>(id, instance), true, false);
  }
  if (id == "strict_monotone_pareto") {
    return StrictMonotoneInclusion(As<SoftCsp>(id, instance), false, true);
  }
  if (id == "csp") return Csp(As<SoftCsp>(id, instance));
  if (id == "thm10") return Thm10(As<SoftCsp>(id, instance));
  if (id == "t1") return T1(As<PayoffGame>(id, instance));
  if (id == "regret_nash") return RegretNash(As<PayoffGame>(id, instance));
  return ParetoNashCheck(As<PayoffGame>(id, instance));
}

Verdict RunTheorem(std::string_view id, std::uint64_t seed) {
  GeneratorConfig cfg = TheoremConfig(id, seed);
  Verdict v = CheckTheorem(id, GenerateInstance(id, cfg));
  if (v.outcome == Outcome::kFail) {
    v.detail = "seed " + std::to_string(seed) + ": " + v.detail;
  }
  return v;
}

}  // namespace optiform::oracle
