#include "optiform/softcsp.h"

#include <algorithm>
#include <set>

namespace optiform {

void Validate(const SoftCsp& problem) {
  ValidateVariables(problem.variables, "variable");
  const int n = static_cast<int>(problem.variables.size());
  for (std::size_t c = 0; c < problem.constraints.size(); ++c) {
    const SoftConstraint& con = problem.constraints[c];
    const std::string where = "constraint " + std::to_string(c);
    std::set<int> seen;
    for (int v : con.scope) {
      if (v < 0 || v >= n) {
        throw ValidationError(where + ": scope index " + std::to_string(v) +
                              " out of range");
      }
      if (!seen.insert(v).second) {
        throw ValidationError(where + ": variable '" +
                              problem.variables[v].name +
                              "' repeated in scope");
      }
    }
    std::vector<int> radices = Radices(problem.variables, con.scope);
    CheckSpace(radices, where);
    if (con.table.size() != SpaceSize(radices)) {
      throw ValidationError(where + ": table has " +
                            std::to_string(con.table.size()) +
                            " entries, expected " +
                            std::to_string(SpaceSize(radices)));
    }
    for (std::size_t t = 0; t < con.table.size(); ++t) {
      RequireCarrier(problem.semiring, con.table[t],
                     where + " entry " + std::to_string(t));
    }
  }
}

const SemiringValue& TableValue(const SoftCsp& problem,
                                const SoftConstraint& constraint,
                                const Assignment& assignment) {
  std::vector<int> radices = Radices(problem.variables, constraint.scope);
  std::vector<int> digits = Project(assignment, constraint.scope);
  return constraint.table[TupleIndex(radices, digits)];
}

SemiringValue SolutionPreference(const SoftCsp& problem,
                                 const Assignment& assignment) {
  ValidateAssignment(problem.variables, assignment);
  SemiringValue pref = One(problem.semiring);
  for (const SoftConstraint& con : problem.constraints) {
    pref = Combine(problem.semiring, pref,
                   TableValue(problem, con, assignment));
  }
  return pref;
}

std::vector<Solution> OptimalSolutions(const SoftCsp& problem) {
  std::vector<int> radices = DomainSizes(problem.variables);
  CheckSpace(radices, "optimal solutions");
  // Streaming maximal-element filter. Removal preserves order and appends
  // happen in enumeration order, so the result stays lexicographic.
  std::vector<Solution> frontier;
  Assignment a(radices.size(), 0);
  do {
    SemiringValue pref = SolutionPreference(problem, a);
    bool dominated = std::any_of(frontier.begin(), frontier.end(),
                                 [&](const Solution& s) {
      return Compare(problem.semiring, pref, s.preference) ==
             PreferenceOrder::kWorse;
    });
    if (dominated) continue;
    std::erase_if(frontier, [&](const Solution& s) {
      return Compare(problem.semiring, pref, s.preference) ==
             PreferenceOrder::kBetter;
    });
    frontier.push_back({a, std::move(pref)});
  } while (NextTuple(radices, a));
  return frontier;
}

std::vector<Assignment> PerfectSolutions(const SoftCsp& problem) {
  std::vector<int> radices = DomainSizes(problem.variables);
  CheckSpace(radices, "solutions");
  const SemiringValue one = One(problem.semiring);
  std::vector<Assignment> out;
  Assignment a(radices.size(), 0);
  do {
    if (SolutionPreference(problem, a) == one) out.push_back(a);
  } while (NextTuple(radices, a));
  return out;
}

bool IsConsistent(const SoftCsp& problem) {
  if (problem.semiring.kind() != SemiringSpec::Kind::kBoolean) {
    throw ValidationError("consistency is defined for boolean problems, got " +
                          problem.semiring.ToString());
  }
  std::vector<int> radices = DomainSizes(problem.variables);
  CheckSpace(radices, "consistency");
  Assignment a(radices.size(), 0);
  do {
    if (SolutionPreference(problem, a).as_bool()) return true;
  } while (NextTuple(radices, a));
  return false;
}

SoftCsp LiftBoolean(const SoftCsp& hard, const SemiringSpec& target) {
  if (hard.semiring.kind() != SemiringSpec::Kind::kBoolean) {
    throw ValidationError("only boolean problems can be lifted");
  }
  const SemiringValue one = One(target);
  const SemiringValue zero = Zero(target);
  SoftCsp out{target, hard.variables, {}};
  for (const SoftConstraint& con : hard.constraints) {
    SoftConstraint lifted{con.scope, {}};
    lifted.table.reserve(con.table.size());
    for (const SemiringValue& v : con.table) {
      lifted.table.push_back(v.as_bool() ? one : zero);
    }
    out.constraints.push_back(std::move(lifted));
  }
  return out;
}

SoftCsp Join(const SoftCsp& first, const SoftCsp& second) {
  if (first.variables != second.variables) {
    throw ValidationError("join: problems have different variables or domains");
  }
  const bool first_bool =
      first.semiring.kind() == SemiringSpec::Kind::kBoolean;
  const bool second_bool =
      second.semiring.kind() == SemiringSpec::Kind::kBoolean;
  if (first.semiring != second.semiring) {
    if (first_bool && !second_bool) {
      return Join(LiftBoolean(first, second.semiring), second);
    }
    if (second_bool && !first_bool) {
      return Join(first, LiftBoolean(second, first.semiring));
    }
    throw ValidationError("join: semirings " + first.semiring.ToString() +
                          " and " + second.semiring.ToString() + " differ");
  }
  SoftCsp out = first;
  out.constraints.insert(out.constraints.end(), second.constraints.begin(),
                         second.constraints.end());
  return out;
}

}  // namespace optiform
