#ifndef OPTIFORM_SOFTCSP_H_
#define OPTIFORM_SOFTCSP_H_

#include <vector>

#include "optiform/common.h"
#include "optiform/semiring.h"

namespace optiform {

// A soft constraint <def, con>. `table` is total: one entry per tuple of the
// scope's domains, row-major with the first scope variable most significant.
struct SoftConstraint {
  std::vector<int> scope;
  std::vector<SemiringValue> table;

  bool operator==(const SoftConstraint&) const = default;
};

// <C, V, D, S>. Several constraints may share a scope.
struct SoftCsp {
  SemiringSpec semiring;
  std::vector<Variable> variables;
  std::vector<SoftConstraint> constraints;

  bool operator==(const SoftCsp&) const = default;
};

struct Solution {
  Assignment assignment;
  SemiringValue preference;

  bool operator==(const Solution&) const = default;
};

// Throws ValidationError (CarrierError for table values).
void Validate(const SoftCsp& problem);

// Table entry of `constraint` at the projection of `assignment`.
const SemiringValue& TableValue(const SoftCsp& problem,
                                const SoftConstraint& constraint,
                                const Assignment& assignment);

// Combination of every constraint's value on `assignment`; 1 when there are
// no constraints.
SemiringValue SolutionPreference(const SoftCsp& problem,
                                 const Assignment& assignment);

// All assignments whose preference is not strictly below another
// assignment's preference, in lexicographic order of value indices. On
// product carriers this is the whole Pareto frontier.
std::vector<Solution> OptimalSolutions(const SoftCsp& problem);

// Assignments whose preference equals the semiring's 1, in lexicographic
// order. For boolean problems these are the classical solutions.
std::vector<Assignment> PerfectSolutions(const SoftCsp& problem);

// Boolean problems only: does some assignment reach preference 1?
bool IsConsistent(const SoftCsp& problem);

// Maps a boolean problem into `target`: 1 to One(target), 0 to Zero(target).
SoftCsp LiftBoolean(const SoftCsp& hard, const SemiringSpec& target);

// Concatenates constraint lists. Variables and domains must match; when
// exactly one side is boolean it is lifted into the other's carrier.
SoftCsp Join(const SoftCsp& first, const SoftCsp& second);

}  // namespace optiform

#endif  // OPTIFORM_SOFTCSP_H_
