#ifndef OPTIFORM_COMMON_H_
#define OPTIFORM_COMMON_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace optiform {

// Exact rational used for every fuzzy, weighted and payoff value.
using Rational = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a structural invariant: bad table, bad order, unknown name.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A value does not belong to the carrier of the semiring it is used with.
class CarrierError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An enumeration space or a search budget is larger than allowed.
class BoundError : public Error {
 public:
  using Error::Error;
};

// A variable of a CSP or CP-net, or a player of a game: a name plus the
// labels of its finite domain (strategy set).
struct Variable {
  std::string name;
  std::vector<std::string> domain;

  int size() const { return static_cast<int>(domain.size()); }
  bool operator==(const Variable&) const = default;
};

// One value index per variable, positionally aligned with the variable list.
using Assignment = std::vector<int>;

// Checks names are unique and domains nonempty with unique labels.
void ValidateVariables(const std::vector<Variable>& variables,
                       std::string_view what);

// Throws ValidationError naming the first variable whose value is out of
// range.
void ValidateAssignment(const std::vector<Variable>& variables,
                        const Assignment& assignment);

std::vector<int> DomainSizes(const std::vector<Variable>& variables);

// Returns -1 when absent.
int FindVariable(const std::vector<Variable>& variables, std::string_view name);
int FindValue(const Variable& variable, std::string_view label);

// Mixed-radix helpers. Tuples are row-major: the first position is the most
// significant digit, so enumeration order is lexicographic.
std::uint64_t SpaceSize(std::span<const int> radices);
std::size_t TupleIndex(std::span<const int> radices,
                       std::span<const int> digits);
std::vector<int> TupleAt(std::span<const int> radices, std::size_t index);

// Advances `digits` like an odometer. Returns false once it wraps to zero.
bool NextTuple(std::span<const int> radices, std::span<int> digits);

// Sizes of the domains at the given variable positions.
std::vector<int> Radices(const std::vector<Variable>& variables,
                         std::span<const int> positions);

// The restriction of `full` to the given positions.
std::vector<int> Project(const Assignment& full, std::span<const int> positions);

// Upper bound on joint spaces the library will enumerate. Reads the
// OPTIFORM_MAX_SPACE environment variable; defaults to 1'000'000.
std::uint64_t MaxSpace();

// Throws BoundError when the product of `radices` exceeds MaxSpace().
void CheckSpace(std::span<const int> radices, std::string_view what);

// Maps an assignment over `from` onto `to` by matching value labels.
// Variables are matched positionally.
Assignment Relabel(const std::vector<Variable>& from,
                   const std::vector<Variable>& to, const Assignment& a);

// "x=a, y=b" rendering for messages.
std::string DescribeAssignment(const std::vector<Variable>& variables,
                               const Assignment& a);

// Value labels of an assignment, in variable order.
std::vector<std::string> Labels(const std::vector<Variable>& variables,
                                const Assignment& a);

}  // namespace optiform

#endif  // OPTIFORM_COMMON_H_
