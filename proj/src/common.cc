#include "optiform/common.h"

#include <cstdlib>
#include <limits>
#include <set>

namespace optiform {

void ValidateVariables(const std::vector<Variable>& variables,
                       std::string_view what) {
  std::set<std::string> names;
  for (const Variable& v : variables) {
    if (v.name.empty()) {
      throw ValidationError(std::string(what) + ": empty name");
    }
    if (!names.insert(v.name).second) {
      throw ValidationError(std::string(what) + ": duplicate name '" + v.name +
                            "'");
    }
    if (v.domain.empty()) {
      throw ValidationError(std::string(what) + " '" + v.name +
                            "': empty domain");
    }
    std::set<std::string> labels;
    for (const std::string& label : v.domain) {
      if (!labels.insert(label).second) {
        throw ValidationError(std::string(what) + " '" + v.name +
                              "': duplicate value '" + label + "'");
      }
    }
  }
}

void ValidateAssignment(const std::vector<Variable>& variables,
                        const Assignment& assignment) {
  if (assignment.size() != variables.size()) {
    throw ValidationError("assignment has " +
                          std::to_string(assignment.size()) +
                          " values, expected " +
                          std::to_string(variables.size()));
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (assignment[i] < 0 || assignment[i] >= variables[i].size()) {
      throw ValidationError("assignment: value index " +
                            std::to_string(assignment[i]) +
                            " out of range for '" + variables[i].name + "'");
    }
  }
}

std::vector<int> DomainSizes(const std::vector<Variable>& variables) {
  std::vector<int> sizes;
  sizes.reserve(variables.size());
  for (const Variable& v : variables) sizes.push_back(v.size());
  return sizes;
}

int FindVariable(const std::vector<Variable>& variables,
                 std::string_view name) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int FindValue(const Variable& variable, std::string_view label) {
  for (std::size_t i = 0; i < variable.domain.size(); ++i) {
    if (variable.domain[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::uint64_t SpaceSize(std::span<const int> radices) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (int r : radices) {
    if (r <= 0) return 0;
    if (size > kMax / static_cast<std::uint64_t>(r)) return kMax;
    size *= static_cast<std::uint64_t>(r);
  }
  return size;
}

std::size_t TupleIndex(std::span<const int> radices,
                       std::span<const int> digits) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    index = index * static_cast<std::size_t>(radices[i]) +
            static_cast<std::size_t>(digits[i]);
  }
  return index;
}

std::vector<int> TupleAt(std::span<const int> radices, std::size_t index) {
  std::vector<int> digits(radices.size(), 0);
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = static_cast<int>(index % static_cast<std::size_t>(radices[i]));
    index /= static_cast<std::size_t>(radices[i]);
  }
  return digits;
}

bool NextTuple(std::span<const int> radices, std::span<int> digits) {
  for (std::size_t i = radices.size(); i-- > 0;) {
    if (++digits[i] < radices[i]) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<int> Radices(const std::vector<Variable>& variables,
                         std::span<const int> positions) {
  std::vector<int> radices;
  radices.reserve(positions.size());
  for (int p : positions) radices.push_back(variables[p].size());
  return radices;
}

std::vector<int> Project(const Assignment& full,
                         std::span<const int> positions) {
  std::vector<int> part;
  part.reserve(positions.size());
  for (int p : positions) part.push_back(full[p]);
  return part;
}

std::uint64_t MaxSpace() {
  constexpr std::uint64_t kDefault = 1'000'000;
  const char* env = std::getenv("OPTIFORM_MAX_SPACE");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || parsed == 0) return kDefault;
  return parsed;
}

void CheckSpace(std::span<const int> radices, std::string_view what) {
  std::uint64_t size = SpaceSize(radices);
  std::uint64_t limit = MaxSpace();
  if (size > limit) {
    throw BoundError(std::string(what) + ": joint space of " +
                     std::to_string(size) + " exceeds the limit of " +
                     std::to_string(limit) + " (OPTIFORM_MAX_SPACE)");
  }
}

Assignment Relabel(const std::vector<Variable>& from,
                   const std::vector<Variable>& to, const Assignment& a) {
  if (from.size() != to.size() || a.size() != from.size()) {
    throw ValidationError("relabel: variable count mismatch");
  }
  Assignment out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int v = FindValue(to[i], from[i].domain.at(a[i]));
    if (v < 0) {
      throw ValidationError("relabel: value '" + from[i].domain[a[i]] +
                            "' missing from '" + to[i].name + "'");
    }
    out[i] = v;
  }
  return out;
}

std::string DescribeAssignment(const std::vector<Variable>& variables,
                               const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size() && i < variables.size(); ++i) {
    if (i > 0) out += ", ";
    out += variables[i].name + "=";
    if (a[i] >= 0 && a[i] < variables[i].size()) {
      out += variables[i].domain[a[i]];
    } else {
      out += "#" + std::to_string(a[i]);
    }
  }
  return out;
}

std::vector<std::string> Labels(const std::vector<Variable>& variables,
                                const Assignment& a) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(variables[i].domain.at(a[i]));
  }
  return out;
}

}  // namespace optiform
