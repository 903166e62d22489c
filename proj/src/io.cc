#include "optiform/io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace optiform::io {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

const json& Field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const json& ArrayField(const json& j, const char* key,
                       const std::string& path) {
  const json& a = Field(j, key, path);
  if (!a.is_array()) Fail(path + "." + key, "expected an array");
  return a;
}

std::string String(const json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> Strings(const json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(String(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<Variable> ParseVariables(const json& doc, const char* key) {
  const json& arr = ArrayField(doc, key, "$");
  std::vector<Variable> vars;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string path = std::string("$.") + key + "[" +
                             std::to_string(k) + "]";
    vars.push_back({String(Field(arr[k], "name", path), path + ".name"),
                    Strings(Field(arr[k], "domain", path), path + ".domain")});
  }
  try {
    ValidateVariables(vars, key);
  } catch (const ValidationError& e) {
    Fail(std::string("$.") + key, e.what());
  }
  return vars;
}

int VariableIndex(const std::vector<Variable>& vars, const json& j,
                  const std::string& path) {
  std::string name = String(j, path);
  int idx = FindVariable(vars, name);
  if (idx < 0) Fail(path, "unknown name '" + name + "'");
  return idx;
}

std::vector<int> VariableIndices(const std::vector<Variable>& vars,
                                 const json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of names");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    int idx = VariableIndex(vars, j[k], path + "[" + std::to_string(k) + "]");
    if (std::find(out.begin(), out.end(), idx) != out.end()) {
      Fail(path, "'" + vars[idx].name + "' listed twice");
    }
    out.push_back(idx);
  }
  return out;
}

int ValueIndex(const Variable& var, const json& j, const std::string& path) {
  std::string label = String(j, path);
  int idx = FindValue(var, label);
  if (idx < 0) {
    Fail(path, "'" + label + "' is not a value of '" + var.name + "'");
  }
  return idx;
}

std::string DescribeTuple(const std::vector<Variable>& vars,
                          const std::vector<int>& positions,
                          const std::vector<int>& digits) {
  if (positions.empty()) return "the empty assignment";
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) out += ", ";
    out += vars[positions[k]].name + "=" + vars[positions[k]].domain[digits[k]];
  }
  return out;
}

// A "when" clause: an object, an array of objects (any of them), or absent.
// Returns one partial assignment per object; -1 leaves a position free.
std::vector<std::vector<int>> ParseWhen(const std::vector<Variable>& vars,
                                        const std::vector<int>& positions,
                                        const json* when,
                                        const std::string& path) {
  std::vector<std::vector<int>> out;
  std::vector<const json*> objects;
  if (when == nullptr) {
    out.emplace_back(positions.size(), -1);
    return out;
  }
  if (when->is_object()) {
    objects.push_back(when);
  } else if (when->is_array()) {
    for (const json& o : *when) objects.push_back(&o);
    if (objects.empty()) Fail(path, "empty disjunction");
  } else {
    Fail(path, "expected an object or an array of objects");
  }
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const std::string p =
        when->is_array() ? path + "[" + std::to_string(k) + "]" : path;
    if (!objects[k]->is_object()) Fail(p, "expected an object");
    std::vector<int> partial(positions.size(), -1);
    for (const auto& [name, value] : objects[k]->items()) {
      int var = FindVariable(vars, name);
      auto it = std::find(positions.begin(), positions.end(), var);
      if (var < 0 || it == positions.end()) {
        Fail(p, "'" + name + "' is not a conditioning variable here");
      }
      partial[it - positions.begin()] =
          ValueIndex(vars[var], value, p + "." + name);
    }
    out.push_back(std::move(partial));
  }
  return out;
}

// Expands rows with "when" clauses into one order per conditioning tuple.
ConditionalTable ParseTable(const std::vector<Variable>& vars, int owner,
                            std::vector<int> conditions, const json& rows,
                            const std::string& path) {
  std::sort(conditions.begin(), conditions.end());
  for (int c : conditions) {
    if (c == owner) Fail(path, "'" + vars[owner].name + "' conditions itself");
  }
  if (!rows.is_array()) Fail(path + ".rows", "expected an array");
  std::vector<int> radices = Radices(vars, conditions);
  CheckSpace(radices, path);
  const std::size_t total = SpaceSize(radices);
  std::vector<std::optional<StrictOrder>> filled(total);
  std::vector<int> source(total, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rp = path + ".rows[" + std::to_string(r) + "]";
    const json& row = rows[r];
    if (!row.is_object()) Fail(rp, "expected an object");
    std::vector<int> ranking;
    const json& order = Field(row, "order", rp);
    if (!order.is_array()) Fail(rp + ".order", "expected an array of values");
    for (std::size_t k = 0; k < order.size(); ++k) {
      ranking.push_back(ValueIndex(vars[owner], order[k],
                                   rp + ".order[" + std::to_string(k) + "]"));
    }
    StrictOrder parsed;
    try {
      parsed = StrictOrder(ranking);
      if (parsed.size() != vars[owner].size()) {
        throw ValidationError("not a strict total order");
      }
    } catch (const ValidationError& e) {
      Fail(rp + ".order", std::string(e.what()) + " over the values of '" +
                              vars[owner].name + "'");
    }
    auto it = row.find("when");
    auto partials = ParseWhen(vars, conditions,
                              it == row.end() ? nullptr : &*it, rp + ".when");
    for (const auto& partial : partials) {
      std::vector<int> digits(conditions.size(), 0);
      do {
        bool match = true;
        for (std::size_t k = 0; k < digits.size(); ++k) {
          if (partial[k] >= 0 && partial[k] != digits[k]) match = false;
        }
        if (!match) continue;
        const std::size_t idx = TupleIndex(radices, digits);
        if (source[idx] >= 0 && source[idx] != static_cast<int>(r)) {
          Fail(rp, "row for " + DescribeTuple(vars, conditions, digits) +
                       " already given by rows[" +
                       std::to_string(source[idx]) + "]");
        }
        source[idx] = static_cast<int>(r);
        filled[idx] = parsed;
      } while (NextTuple(radices, digits));
    }
  }
  ConditionalTable table{conditions, {}};
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!filled[idx]) {
      Fail(path, "no row for " +
                     DescribeTuple(vars, conditions, TupleAt(radices, idx)));
    }
    table.rows.push_back(*filled[idx]);
  }
  return table;
}

// Tables keyed by owner. `owner_key` names the owner, `cond_key` lists the
// conditioning variables.
std::vector<ConditionalTable> ParseTables(const json& doc,
                                          const std::vector<Variable>& vars,
                                          const char* owner_key,
                                          const char* cond_key) {
  const json& arr = ArrayField(doc, "preferences", "$");
  std::vector<std::optional<ConditionalTable>> tables(vars.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string path = "$.preferences[" + std::to_string(k) + "]";
    int owner = VariableIndex(vars, Field(arr[k], owner_key, path),
                              path + "." + owner_key);
    if (tables[owner]) {
      Fail(path, "second table for '" + vars[owner].name + "'");
    }
    std::vector<int> conditions;
    if (auto it = arr[k].find(cond_key); it != arr[k].end()) {
      conditions = VariableIndices(vars, *it, path + "." + cond_key);
    }
    tables[owner] = ParseTable(vars, owner, conditions,
                               Field(arr[k], "rows", path), path);
  }
  std::vector<ConditionalTable> out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!tables[i]) {
      Fail("$.preferences", "no table for '" + vars[i].name + "'");
    }
    out.push_back(std::move(*tables[i]));
  }
  return out;
}

// A flat "table" in row-major order, or "entries" with optional "default".
std::vector<SemiringValue> ParseValueTable(const std::vector<Variable>& vars,
                                           const std::vector<int>& scope,
                                           const json& j,
                                           const std::string& path) {
  std::vector<int> radices = Radices(vars, scope);
  CheckSpace(radices, path);
  const std::size_t total = SpaceSize(radices);
  if (auto it = j.find("table"); it != j.end()) {
    if (!it->is_array()) Fail(path + ".table", "expected an array");
    if (it->size() != total) {
      Fail(path + ".table", "has " + std::to_string(it->size()) +
                                " entries, expected " + std::to_string(total));
    }
    std::vector<SemiringValue> out;
    for (std::size_t k = 0; k < total; ++k) {
      out.push_back(ValueFromJson((*it)[k], path + ".table[" +
                                                std::to_string(k) + "]"));
    }
    return out;
  }
  const json& entries = ArrayField(j, "entries", path);
  std::vector<std::optional<SemiringValue>> slots(total);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string ep = path + ".entries[" + std::to_string(k) + "]";
    const json& when = Field(entries[k], "when", ep);
    auto partials = ParseWhen(vars, scope, &when, ep + ".when");
    std::vector<int> digits = partials.front();
    if (partials.size() != 1 ||
        std::find(digits.begin(), digits.end(), -1) != digits.end()) {
      Fail(ep + ".when", "must assign every variable of the scope");
    }
    const std::size_t idx = TupleIndex(radices, digits);
    if (slots[idx]) {
      Fail(ep, "tuple " + DescribeTuple(vars, scope, digits) + " given twice");
    }
    slots[idx] = ValueFromJson(Field(entries[k], "value", ep), ep + ".value");
  }
  std::optional<SemiringValue> fallback;
  if (auto it = j.find("default"); it != j.end()) {
    fallback = ValueFromJson(*it, path + ".default");
  }
  std::vector<SemiringValue> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!slots[idx] && !fallback) {
      Fail(path, "missing table tuple " +
                     DescribeTuple(vars, scope, TupleAt(radices, idx)));
    }
    out.push_back(slots[idx] ? *slots[idx] : *fallback);
  }
  return out;
}

// Booleans may be written as 0/1, which read as numbers.
SemiringValue Coerce(const SemiringSpec& spec, SemiringValue v) {
  if (spec.kind() == SemiringSpec::Kind::kBoolean && v.is_number() &&
      (v.as_number() == Rational(0) || v.as_number() == Rational(1))) {
    return SemiringValue::Bool(v.as_number() == Rational(1));
  }
  if (spec.kind() == SemiringSpec::Kind::kProduct && v.is_tuple() &&
      v.items().size() == spec.factors().size()) {
    std::vector<SemiringValue> items;
    for (std::size_t k = 0; k < v.items().size(); ++k) {
      items.push_back(Coerce(spec.factors()[k], v.items()[k]));
    }
    return SemiringValue::Tuple(std::move(items));
  }
  return v;
}

template <typename F>
auto Checked(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    Fail(path, e.what());
  }
}

CpNet ParseCpnet(const json& doc) {
  CpNet net{ParseVariables(doc, "variables"), {}};
  net.tables = ParseTables(doc, net.variables, "variable", "parents");
  Checked("$", [&] {
    Validate(net);
    return 0;
  });
  return net;
}

PpGame ParsePpGame(const json& doc) {
  PpGame game{ParseVariables(doc, "players"), {}};
  game.prefs = ParseTables(doc, game.players, "player", "neighbours");
  Checked("$", [&] {
    Validate(game);
    return 0;
  });
  return game;
}

SoftCsp ParseScsp(const json& doc) {
  SoftCsp csp;
  csp.semiring = Checked("$.semiring", [&] {
    return ParseSemiring(String(Field(doc, "semiring", "$"), "$.semiring"));
  });
  csp.variables = ParseVariables(doc, "variables");
  const json& arr = ArrayField(doc, "constraints", "$");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string path = "$.constraints[" + std::to_string(k) + "]";
    SoftConstraint con;
    con.scope = VariableIndices(csp.variables, Field(arr[k], "scope", path),
                                path + ".scope");
    con.table = ParseValueTable(csp.variables, con.scope, arr[k], path);
    for (std::size_t t = 0; t < con.table.size(); ++t) {
      con.table[t] = Coerce(csp.semiring, std::move(con.table[t]));
      Checked(path, [&] {
        RequireCarrier(csp.semiring, con.table[t],
                       "entry " + std::to_string(t));
        return 0;
      });
    }
    csp.constraints.push_back(std::move(con));
  }
  Checked("$", [&] {
    Validate(csp);
    return 0;
  });
  return csp;
}

PayoffGame ParsePayoffGame(const json& doc) {
  PayoffGame game;
  std::string carrier = String(Field(doc, "carrier", "$"), "$.carrier");
  if (carrier != "rational") {
    game.carrier = Checked("$.carrier", [&] { return ParseSemiring(carrier); });
  }
  game.players = ParseVariables(doc, "players");
  const std::size_t n = game.players.size();
  game.neighbours.resize(n);
  game.payoffs.resize(n);
  std::vector<bool> seen(n, false);
  const json& arr = ArrayField(doc, "payoffs", "$");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string path = "$.payoffs[" + std::to_string(k) + "]";
    int i = VariableIndex(game.players, Field(arr[k], "player", path),
                          path + ".player");
    if (seen[i]) Fail(path, "second table for '" + game.players[i].name + "'");
    seen[i] = true;
    std::vector<int> neigh;
    if (auto it = arr[k].find("neighbours"); it != arr[k].end()) {
      neigh = VariableIndices(game.players, *it, path + ".neighbours");
    }
    if (std::find(neigh.begin(), neigh.end(), i) != neigh.end()) {
      Fail(path + ".neighbours", "a player cannot be its own neighbour");
    }
    std::sort(neigh.begin(), neigh.end());
    game.neighbours[i] = neigh;
    std::vector<int> scope = PayoffScope(game, i);
    if (auto it = arr[k].find("scope"); it != arr[k].end()) {
      if (VariableIndices(game.players, *it, path + ".scope") != scope) {
        Fail(path + ".scope", "must list the player and its neighbours in "
                              "player order");
      }
    }
    game.payoffs[i] = ParseValueTable(game.players, scope, arr[k], path);
    if (game.carrier) {
      for (SemiringValue& v : game.payoffs[i]) {
        v = Coerce(*game.carrier, std::move(v));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      Fail("$.payoffs", "no table for '" + game.players[i].name + "'");
    }
  }
  Checked("$", [&] {
    Validate(game);
    return 0;
  });
  return game;
}

Digraph ParseGraph(const json& doc) {
  Digraph g;
  g.nodes = Strings(Field(doc, "nodes", "$"), "$.nodes");
  const json& edges = ArrayField(doc, "edges", "$");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "$.edges[" + std::to_string(k) + "]";
    auto ends = Strings(edges[k], path);
    if (ends.size() != 2) Fail(path, "expected [from, to]");
    int from = static_cast<int>(
        std::find(g.nodes.begin(), g.nodes.end(), ends[0]) - g.nodes.begin());
    int to = static_cast<int>(
        std::find(g.nodes.begin(), g.nodes.end(), ends[1]) - g.nodes.begin());
    if (from == g.size() || to == g.size()) Fail(path, "unknown node");
    g.edges.emplace_back(from, to);
  }
  Checked("$", [&] {
    Validate(g);
    return 0;
  });
  return g;
}

// ---------------------------------------------------------------------------

json VariablesJson(const std::vector<Variable>& vars) {
  json out = json::array();
  for (const Variable& v : vars) {
    out.push_back({{"name", v.name}, {"domain", v.domain}});
  }
  return out;
}

json NamesJson(const std::vector<Variable>& vars,
               const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(vars[i].name);
  return out;
}

json TablesJson(const std::vector<Variable>& vars,
                const std::vector<ConditionalTable>& tables,
                const char* owner_key, const char* cond_key) {
  json out = json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const ConditionalTable& t = tables[i];
    std::vector<int> radices = Radices(vars, t.conditions);
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      std::vector<int> digits = TupleAt(radices, r);
      json when = json::object();
      for (std::size_t k = 0; k < digits.size(); ++k) {
        const Variable& c = vars[t.conditions[k]];
        when[c.name] = c.domain[digits[k]];
      }
      json order = json::array();
      for (int v : t.rows[r].ranking()) order.push_back(vars[i].domain[v]);
      rows.push_back({{"when", when}, {"order", order}});
    }
    out.push_back({{owner_key, vars[i].name},
                   {cond_key, NamesJson(vars, t.conditions)},
                   {"rows", rows}});
  }
  return out;
}

json TableJson(const std::vector<SemiringValue>& table) {
  json out = json::array();
  for (const SemiringValue& v : table) out.push_back(ValueToJson(v));
  return out;
}

struct ToJsonVisitor {
  json operator()(const CpNet& net) const {
    return {{"kind", "cpnet"},
            {"variables", VariablesJson(net.variables)},
            {"preferences",
             TablesJson(net.variables, net.tables, "variable", "parents")}};
  }
  json operator()(const PpGame& game) const {
    return {{"kind", "ppgame"},
            {"players", VariablesJson(game.players)},
            {"preferences",
             TablesJson(game.players, game.prefs, "player", "neighbours")}};
  }
  json operator()(const SoftCsp& csp) const {
    json cons = json::array();
    for (const SoftConstraint& c : csp.constraints) {
      cons.push_back({{"scope", NamesJson(csp.variables, c.scope)},
                      {"table", TableJson(c.table)}});
    }
    return {{"kind", "scsp"},
            {"semiring", csp.semiring.ToString()},
            {"variables", VariablesJson(csp.variables)},
            {"constraints", cons}};
  }
  json operator()(const PayoffGame& game) const {
    json payoffs = json::array();
    for (std::size_t i = 0; i < game.players.size(); ++i) {
      const int p = static_cast<int>(i);
      payoffs.push_back(
          {{"player", game.players[i].name},
           {"neighbours", NamesJson(game.players, game.neighbours[i])},
           {"scope", NamesJson(game.players, PayoffScope(game, p))},
           {"table", TableJson(game.payoffs[i])}});
    }
    return {{"kind", "payoffgame"},
            {"carrier", game.carrier ? game.carrier->ToString() : "rational"},
            {"players", VariablesJson(game.players)},
            {"payoffs", payoffs}};
  }
  json operator()(const Digraph& g) const {
    json edges = json::array();
    for (auto [from, to] : g.edges) {
      edges.push_back({g.nodes[from], g.nodes[to]});
    }
    return {{"kind", "graph"}, {"nodes", g.nodes}, {"edges", edges}};
  }
};

}  // namespace

std::string KindName(const Document& doc) {
  static const char* const kNames[] = {"cpnet", "scsp", "ppgame",
                                       "payoffgame", "graph"};
  return kNames[doc.index()];
}

SemiringSpec ParseSemiring(std::string_view text) {
  if (text == "boolean") return SemiringSpec::Boolean();
  if (text == "fuzzy") return SemiringSpec::Fuzzy();
  if (text == "weighted") return SemiringSpec::Weighted();
  const std::string_view prefix = "product(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    std::string_view inner =
        text.substr(prefix.size(), text.size() - prefix.size() - 1);
    std::vector<SemiringSpec> factors;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= inner.size(); ++k) {
      if (k == inner.size() || (inner[k] == ',' && depth == 0)) {
        factors.push_back(ParseSemiring(inner.substr(start, k - start)));
        start = k + 1;
      } else if (inner[k] == '(') {
        ++depth;
      } else if (inner[k] == ')') {
        --depth;
      }
    }
    return SemiringSpec::Product(std::move(factors));
  }
  throw ValidationError("unknown semiring '" + std::string(text) + "'");
}

json ValueToJson(const SemiringValue& v) {
  switch (v.tag()) {
    case SemiringValue::Tag::kBool:
      return v.as_bool() ? 1 : 0;
    case SemiringValue::Tag::kInfinity:
      return "inf";
    case SemiringValue::Tag::kNumber:
      if (v.as_number().denominator() == 1) return v.as_number().numerator();
      return FormatRational(v.as_number());
    case SemiringValue::Tag::kTuple: {
      json out = json::array();
      for (const SemiringValue& item : v.items()) {
        out.push_back(ValueToJson(item));
      }
      return out;
    }
  }
  return nullptr;
}

SemiringValue ValueFromJson(const json& j, const std::string& path) {
  try {
    if (j.is_boolean()) return SemiringValue::Bool(j.get<bool>());
    if (j.is_number()) return SemiringValue::Number(ParseRational(j.dump()));
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      if (s == "inf") return SemiringValue::Infinity();
      return SemiringValue::Number(ParseRational(s));
    }
    if (j.is_array()) {
      std::vector<SemiringValue> items;
      for (std::size_t k = 0; k < j.size(); ++k) {
        items.push_back(
            ValueFromJson(j[k], path + "[" + std::to_string(k) + "]"));
      }
      return SemiringValue::Tuple(std::move(items));
    }
  } catch (const ValidationError& e) {
    Fail(path, e.what());
  }
  Fail(path, "expected a number, \"p/q\", \"inf\", a boolean or an array");
}

Document ParseDocument(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("syntax error: ") + e.what());
  }
  const std::string kind = String(Field(doc, "kind", "$"), "$.kind");
  Document out;
  if (kind == "cpnet") {
    out = ParseCpnet(doc);
  } else if (kind == "scsp") {
    out = ParseScsp(doc);
  } else if (kind == "ppgame") {
    out = ParsePpGame(doc);
  } else if (kind == "payoffgame") {
    out = ParsePayoffGame(doc);
  } else if (kind == "graph") {
    out = ParseGraph(doc);
  } else {
    Fail("$.kind", "unknown kind '" + kind + "'");
  }
  return out;
}

Document ReadDocument(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseDocument(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

json ToJson(const Document& doc) { return std::visit(ToJsonVisitor{}, doc); }

std::string Serialize(const Document& doc) { return ToJson(doc).dump(2) + "\n"; }

}  // namespace optiform::io
