#include "optiform/order.h"

#include <algorithm>

namespace optiform {

StrictOrder::StrictOrder(std::vector<int> ranking)
    : ranking_(std::move(ranking)), rank_(ranking_.size(), -1) {
  if (ranking_.empty()) {
    throw ValidationError("not a strict total order: empty ranking");
  }
  const int n = static_cast<int>(ranking_.size());
  for (int pos = 0; pos < n; ++pos) {
    int v = ranking_[pos];
    if (v < 0 || v >= n) {
      throw ValidationError("not a strict total order: value index " +
                            std::to_string(v) + " out of range");
    }
    if (rank_[v] >= 0) {
      throw ValidationError("not a strict total order: value index " +
                            std::to_string(v) + " listed twice");
    }
    rank_[v] = pos;
  }
}

StrictOrder StrictOrder::Restrict(std::span<const int> new_index) const {
  std::vector<int> ranking;
  for (int v : ranking_) {
    if (new_index[v] >= 0) ranking.push_back(new_index[v]);
  }
  return StrictOrder(std::move(ranking));
}

void ValidateTable(const std::vector<Variable>& variables, int owner,
                   const ConditionalTable& table, std::string_view what) {
  const std::string where =
      std::string(what) + " '" + variables[owner].name + "'";
  const int n = static_cast<int>(variables.size());
  for (std::size_t k = 0; k < table.conditions.size(); ++k) {
    int c = table.conditions[k];
    if (c < 0 || c >= n) {
      throw ValidationError(where + ": condition index out of range");
    }
    if (c == owner) {
      throw ValidationError(where + ": depends on itself");
    }
    if (k > 0 && table.conditions[k - 1] >= c) {
      throw ValidationError(where + ": conditions must be ascending and unique");
    }
  }
  std::vector<int> radices = Radices(variables, table.conditions);
  CheckSpace(radices, where);
  if (table.rows.size() != SpaceSize(radices)) {
    throw ValidationError(where + ": " + std::to_string(table.rows.size()) +
                          " rows, expected " +
                          std::to_string(SpaceSize(radices)));
  }
  for (const StrictOrder& row : table.rows) {
    if (row.size() != variables[owner].size()) {
      throw ValidationError(where + ": row order has " +
                            std::to_string(row.size()) + " values, domain has " +
                            std::to_string(variables[owner].size()));
    }
  }
}

const StrictOrder& RowFor(const std::vector<Variable>& variables,
                          const ConditionalTable& table,
                          const Assignment& profile) {
  std::vector<int> radices = Radices(variables, table.conditions);
  std::vector<int> digits = Project(profile, table.conditions);
  return table.rows[TupleIndex(radices, digits)];
}

std::vector<int> NeverTopValues(const ConditionalTable& table,
                                int domain_size) {
  std::vector<bool> is_top(domain_size, false);
  for (const StrictOrder& row : table.rows) is_top[row.top()] = true;
  std::vector<int> out;
  for (int v = 0; v < domain_size; ++v) {
    if (!is_top[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> DominatedValues(const ConditionalTable& table,
                                 int domain_size) {
  std::vector<int> out;
  for (int loser = 0; loser < domain_size; ++loser) {
    for (int winner = 0; winner < domain_size; ++winner) {
      if (winner == loser) continue;
      bool everywhere =
          std::all_of(table.rows.begin(), table.rows.end(),
                      [&](const StrictOrder& r) {
                        return r.Prefers(winner, loser);
                      });
      if (everywhere) {
        out.push_back(loser);
        break;
      }
    }
  }
  return out;
}

void RemoveValues(std::vector<Variable>& variables,
                  std::vector<ConditionalTable>& tables,
                  const ValueSets& removals) {
  const std::size_t n = variables.size();
  if (removals.size() != n) {
    throw ValidationError("removal sets do not match the variable count");
  }
  // new_index[i][old value] = new value, or -1 when removed.
  std::vector<std::vector<int>> new_index(n);
  // old_of_new[i][new value] = old value.
  std::vector<std::vector<int>> old_of_new(n);
  std::vector<Variable> shrunk(n);
  for (std::size_t i = 0; i < n; ++i) {
    new_index[i].assign(variables[i].size(), 0);
    for (int v : removals[i]) {
      if (v < 0 || v >= variables[i].size()) {
        throw ValidationError("removal of unknown value index " +
                              std::to_string(v) + " from '" +
                              variables[i].name + "'");
      }
      new_index[i][v] = -1;
    }
    shrunk[i].name = variables[i].name;
    for (int v = 0; v < variables[i].size(); ++v) {
      if (new_index[i][v] < 0) continue;
      new_index[i][v] = static_cast<int>(old_of_new[i].size());
      old_of_new[i].push_back(v);
      shrunk[i].domain.push_back(variables[i].domain[v]);
    }
    if (shrunk[i].domain.empty()) {
      throw ValidationError("removal empties the domain of '" +
                            variables[i].name + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    ConditionalTable& table = tables[i];
    std::vector<int> old_radices = Radices(variables, table.conditions);
    std::vector<int> new_radices = Radices(shrunk, table.conditions);
    std::vector<StrictOrder> rows;
    rows.reserve(SpaceSize(new_radices));
    std::vector<int> digits(table.conditions.size(), 0);
    std::vector<int> old_digits(table.conditions.size());
    do {
      for (std::size_t k = 0; k < digits.size(); ++k) {
        old_digits[k] = old_of_new[table.conditions[k]][digits[k]];
      }
      rows.push_back(table.rows[TupleIndex(old_radices, old_digits)].Restrict(
          new_index[i]));
    } while (NextTuple(new_radices, digits));
    table.rows = std::move(rows);
  }
  variables = std::move(shrunk);
}

}  // namespace optiform
