#include "optiform/cpnet.h"

#include <algorithm>
#include <deque>
#include <set>

namespace optiform {

void Validate(const CpNet& net) {
  ValidateVariables(net.variables, "variable");
  if (net.tables.size() != net.variables.size()) {
    throw ValidationError("cp-net: expected one table per variable");
  }
  for (std::size_t i = 0; i < net.tables.size(); ++i) {
    ValidateTable(net.variables, static_cast<int>(i), net.tables[i],
                  "preference table of");
  }
}

Digraph DependencyGraph(const CpNet& net) {
  Digraph g;
  for (const Variable& v : net.variables) g.nodes.push_back(v.name);
  for (std::size_t child = 0; child < net.tables.size(); ++child) {
    for (int parent : net.tables[child].conditions) {
      g.edges.emplace_back(parent, static_cast<int>(child));
    }
  }
  return g;
}

bool IsAcyclic(const CpNet& net) { return IsAcyclic(DependencyGraph(net)); }

const StrictOrder& RowFor(const CpNet& net, int var,
                          const Assignment& outcome) {
  return RowFor(net.variables, net.tables[var], outcome);
}

std::vector<Flip> ImprovingFlips(const CpNet& net, const Assignment& outcome) {
  ValidateAssignment(net.variables, outcome);
  std::vector<Flip> flips;
  for (int var = 0; var < static_cast<int>(net.variables.size()); ++var) {
    const StrictOrder& row = RowFor(net, var, outcome);
    for (int value = 0; value < net.variables[var].size(); ++value) {
      if (row.Prefers(value, outcome[var])) flips.push_back({var, value});
    }
  }
  return flips;
}

bool IsOptimal(const CpNet& net, const Assignment& outcome) {
  ValidateAssignment(net.variables, outcome);
  for (int var = 0; var < static_cast<int>(net.variables.size()); ++var) {
    if (RowFor(net, var, outcome).top() != outcome[var]) return false;
  }
  return true;
}

std::vector<Assignment> OptimalOutcomes(const CpNet& net) {
  std::vector<int> radices = DomainSizes(net.variables);
  CheckSpace(radices, "optimal outcomes");
  std::vector<Assignment> out;
  Assignment o(radices.size(), 0);
  do {
    if (IsOptimal(net, o)) out.push_back(o);
  } while (NextTuple(radices, o));
  return out;
}

SoftCsp OptimalityConstraints(const CpNet& net) {
  SoftCsp csp{SemiringSpec::Boolean(), net.variables, {}};
  for (int var = 0; var < static_cast<int>(net.variables.size()); ++var) {
    const ConditionalTable& table = net.tables[var];
    std::vector<StrictOrder> distinct;
    for (const StrictOrder& row : table.rows) {
      if (std::find(distinct.begin(), distinct.end(), row) == distinct.end()) {
        distinct.push_back(row);
      }
    }
    const int domain = net.variables[var].size();
    for (const StrictOrder& order : distinct) {
      SoftConstraint con;
      con.scope = table.conditions;
      con.scope.push_back(var);
      con.table.reserve(table.rows.size() * domain);
      for (const StrictOrder& row : table.rows) {
        for (int x = 0; x < domain; ++x) {
          bool allowed = !(row == order) || x == order.top();
          con.table.push_back(SemiringValue::Bool(allowed));
        }
      }
      csp.constraints.push_back(std::move(con));
    }
  }
  return csp;
}

bool IsEligible(const CpNet& net) {
  return IsConsistent(OptimalityConstraints(net));
}

Assignment SweepOptimal(const CpNet& net) {
  auto order = TopologicalOrder(DependencyGraph(net));
  if (!order) {
    throw ValidationError("sweep needs an acyclic cp-net");
  }
  // Parents are always assigned before children, so the unassigned zeros in
  // `outcome` are never read.
  Assignment outcome(net.variables.size(), 0);
  for (int var : *order) outcome[var] = RowFor(net, var, outcome).top();
  return outcome;
}

Dominance Dominates(const CpNet& net, const Assignment& better,
                    const Assignment& worse, std::size_t budget) {
  ValidateAssignment(net.variables, better);
  ValidateAssignment(net.variables, worse);
  std::set<Assignment> visited{better};
  std::deque<Assignment> frontier{better};
  std::size_t expanded = 0;
  while (!frontier.empty()) {
    if (expanded >= budget) return Dominance::kBudgetExhausted;
    Assignment current = std::move(frontier.front());
    frontier.pop_front();
    ++expanded;
    for (int var = 0; var < static_cast<int>(net.variables.size()); ++var) {
      const StrictOrder& row = RowFor(net, var, current);
      for (int value = 0; value < net.variables[var].size(); ++value) {
        if (!row.Prefers(current[var], value)) continue;
        Assignment next = current;
        next[var] = value;
        if (next == worse) return Dominance::kDominates;
        if (visited.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return Dominance::kNotDominated;
}

namespace {

// Is the parent at position `pos` of var's condition list redundant?
bool IsRedundantAt(const CpNet& net, int var, std::size_t pos) {
  const ConditionalTable& table = net.tables[var];
  std::vector<int> radices = Radices(net.variables, table.conditions);
  std::vector<int> digits(radices.size(), 0);
  do {
    if (digits[pos] != 0) continue;
    const StrictOrder& base = table.rows[TupleIndex(radices, digits)];
    std::vector<int> probe = digits;
    for (int y = 1; y < radices[pos]; ++y) {
      probe[pos] = y;
      if (!(table.rows[TupleIndex(radices, probe)] == base)) return false;
    }
  } while (NextTuple(radices, digits));
  return true;
}

}  // namespace

std::vector<int> RedundantParents(const CpNet& net, int var) {
  std::vector<int> out;
  const auto& parents = net.tables[var].conditions;
  for (std::size_t pos = 0; pos < parents.size(); ++pos) {
    if (IsRedundantAt(net, var, pos)) out.push_back(parents[pos]);
  }
  return out;
}

CpNet DropParent(const CpNet& net, int var, int parent) {
  const ConditionalTable& table = net.tables[var];
  auto it = std::find(table.conditions.begin(), table.conditions.end(), parent);
  if (it == table.conditions.end()) {
    throw ValidationError("'" + net.variables[parent].name +
                          "' is not a parent of '" + net.variables[var].name +
                          "'");
  }
  const std::size_t pos = it - table.conditions.begin();
  std::vector<int> old_radices = Radices(net.variables, table.conditions);
  ConditionalTable reduced;
  reduced.conditions = table.conditions;
  reduced.conditions.erase(reduced.conditions.begin() + pos);
  std::vector<int> new_radices = Radices(net.variables, reduced.conditions);
  std::vector<int> digits(reduced.conditions.size(), 0);
  do {
    std::vector<int> old_digits = digits;
    old_digits.insert(old_digits.begin() + pos, 0);
    reduced.rows.push_back(table.rows[TupleIndex(old_radices, old_digits)]);
  } while (NextTuple(new_radices, digits));
  CpNet out = net;
  out.tables[var] = std::move(reduced);
  return out;
}

CpNet Reduce(const CpNet& net) {
  CpNet out = net;
  for (int var = 0; var < static_cast<int>(out.variables.size()); ++var) {
    for (;;) {
      std::vector<int> redundant = RedundantParents(out, var);
      if (redundant.empty()) break;
      out = DropParent(out, var, redundant.front());
    }
  }
  if (!IsReduced(out)) {
    throw Error("internal: reduction did not reach a reduced cp-net");
  }
  return out;
}

bool IsReduced(const CpNet& net) {
  for (int var = 0; var < static_cast<int>(net.variables.size()); ++var) {
    if (!RedundantParents(net, var).empty()) return false;
  }
  return true;
}

ValueSets NbrElements(const CpNet& net) {
  ValueSets out;
  for (std::size_t i = 0; i < net.variables.size(); ++i) {
    out.push_back(NeverTopValues(net.tables[i], net.variables[i].size()));
  }
  return out;
}

ValueSets DominatedElements(const CpNet& net) {
  ValueSets out;
  for (std::size_t i = 0; i < net.variables.size(); ++i) {
    out.push_back(DominatedValues(net.tables[i], net.variables[i].size()));
  }
  return out;
}

CpNet Eliminate(const CpNet& net, const ValueSets& removals) {
  CpNet out = net;
  RemoveValues(out.variables, out.tables, removals);
  return out;
}

NetElimination ReduceToFixpoint(const CpNet& net, EliminationMode mode) {
  NetElimination run{net, {}};
  for (;;) {
    ValueSets removals = mode == EliminationMode::kNeverBestResponse
                             ? NbrElements(run.result)
                             : DominatedElements(run.result);
    EliminationStep step;
    bool any = false;
    for (std::size_t i = 0; i < removals.size(); ++i) {
      step.removed.emplace_back();
      for (int v : removals[i]) {
        step.removed.back().push_back(run.result.variables[i].domain[v]);
        any = true;
      }
    }
    if (!any) break;
    run.result = Eliminate(run.result, removals);
    run.steps.push_back(std::move(step));
  }
  return run;
}

}  // namespace optiform
