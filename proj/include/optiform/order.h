#ifndef OPTIFORM_ORDER_H_
#define OPTIFORM_ORDER_H_

// Strict total orders over a finite domain, and tables of such orders keyed
// by the joint assignment of a set of conditioning variables. A CP-net's
// conditional preference tables and a parametrized game's preference
// relations are both ConditionalTables.

#include <span>
#include <string_view>
#include <vector>

#include "optiform/common.h"

namespace optiform {

class StrictOrder {
 public:
  StrictOrder() = default;
  // `ranking` lists value indices best first and must be a permutation of
  // 0..n-1; anything else throws "not a strict total order".
  explicit StrictOrder(std::vector<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  int top() const { return ranking_.front(); }
  const std::vector<int>& ranking() const { return ranking_; }
  // 0 is best.
  int rank_of(int value) const { return rank_[value]; }
  // a is strictly preferred to b.
  bool Prefers(int a, int b) const { return rank_[a] < rank_[b]; }

  // Keeps the values with new_index[v] >= 0 and renumbers them.
  StrictOrder Restrict(std::span<const int> new_index) const;

  bool operator==(const StrictOrder& other) const {
    return ranking_ == other.ranking_;
  }

 private:
  std::vector<int> ranking_;
  std::vector<int> rank_;
};

struct ConditionalTable {
  // Conditioning variables in ascending index order, never the owner.
  std::vector<int> conditions;
  // One order per joint assignment of `conditions`, row-major.
  std::vector<StrictOrder> rows;

  bool operator==(const ConditionalTable&) const = default;
};

// Checks condition indices, row count and every row's domain size.
void ValidateTable(const std::vector<Variable>& variables, int owner,
                   const ConditionalTable& table, std::string_view what);

// Row selected by a full profile / outcome.
const StrictOrder& RowFor(const std::vector<Variable>& variables,
                          const ConditionalTable& table,
                          const Assignment& profile);

enum class EliminationMode { kNeverBestResponse, kStrictlyDominated };

// Per-variable sets of value indices, each sorted ascending.
using ValueSets = std::vector<std::vector<int>>;

// Values that top no row of the table.
std::vector<int> NeverTopValues(const ConditionalTable& table, int domain_size);
// Values below some fixed other value in every row.
std::vector<int> DominatedValues(const ConditionalTable& table,
                                 int domain_size);

// Drops `removals` from the domains and rebuilds every table: rows whose
// conditioning assignment mentions a removed value disappear and surviving
// orders are restricted to surviving values. Throws ValidationError if a
// domain would become empty.
void RemoveValues(std::vector<Variable>& variables,
                  std::vector<ConditionalTable>& tables,
                  const ValueSets& removals);

// One maximal elimination round: the removed labels per variable.
struct EliminationStep {
  std::vector<std::vector<std::string>> removed;
};

}  // namespace optiform

#endif  // OPTIFORM_ORDER_H_
