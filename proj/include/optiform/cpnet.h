#ifndef OPTIFORM_CPNET_H_
#define OPTIFORM_CPNET_H_

// CP-nets: features with finite domains and conditional preference tables
// holding a strict total order for every assignment of the parents.

#include <cstddef>
#include <vector>

#include "optiform/common.h"
#include "optiform/graph.h"
#include "optiform/order.h"
#include "optiform/softcsp.h"

namespace optiform {

struct CpNet {
  std::vector<Variable> variables;
  // tables[i] holds Pa(X_i) in `conditions`.
  std::vector<ConditionalTable> tables;

  const std::vector<int>& parents(int var) const {
    return tables[var].conditions;
  }
  bool operator==(const CpNet&) const = default;
};

void Validate(const CpNet& net);

// Edges parent -> child.
Digraph DependencyGraph(const CpNet& net);
bool IsAcyclic(const CpNet& net);

// The order selected for `var` by the parent values in `outcome`.
const StrictOrder& RowFor(const CpNet& net, int var, const Assignment& outcome);

struct Flip {
  int variable;
  int value;
  bool operator==(const Flip&) const = default;
};

// Every single-variable change to a strictly better value, ordered by
// variable then by value index.
std::vector<Flip> ImprovingFlips(const CpNet& net, const Assignment& outcome);

bool IsOptimal(const CpNet& net, const Assignment& outcome);
// Lexicographic order.
std::vector<Assignment> OptimalOutcomes(const CpNet& net);

// opt(N): per variable and per distinct row order, the hard constraint
// "(disjunction of the parent assignments using that order) -> X = top".
// Scope is Pa(X) followed by X.
SoftCsp OptimalityConstraints(const CpNet& net);

// opt(N) is consistent.
bool IsEligible(const CpNet& net);

// Topological sweep assigning each variable its best value given its
// already assigned parents. Throws ValidationError on a cyclic net.
Assignment SweepOptimal(const CpNet& net);

enum class Dominance { kDominates, kNotDominated, kBudgetExhausted };

inline constexpr std::size_t kDefaultDominanceBudget = 100'000;

// Is there a nonempty chain of worsening flips from `better` to `worse`?
// Breadth-first over outcomes; `budget` caps the number of expanded nodes.
Dominance Dominates(const CpNet& net, const Assignment& better,
                    const Assignment& worse,
                    std::size_t budget = kDefaultDominanceBudget);

// Parents Y of `var` such that the row never changes when only Y changes.
std::vector<int> RedundantParents(const CpNet& net, int var);

// Drops one parent and keeps the rows at that parent's first value.
CpNet DropParent(const CpNet& net, int var, int parent);

// r(N). Variables in ascending order; for each, the first redundant parent
// (by index) is dropped and the scan restarts until none is redundant.
CpNet Reduce(const CpNet& net);
bool IsReduced(const CpNet& net);

// Values that top no row / are beaten by one fixed value in every row.
ValueSets NbrElements(const CpNet& net);
ValueSets DominatedElements(const CpNet& net);

// The subnet without `removals`; see RemoveValues.
CpNet Eliminate(const CpNet& net, const ValueSets& removals);

struct NetElimination {
  CpNet result;
  std::vector<EliminationStep> steps;
};

// Removes every currently eligible value each round until none is left.
NetElimination ReduceToFixpoint(const CpNet& net, EliminationMode mode);

}  // namespace optiform

#endif  // OPTIFORM_CPNET_H_
