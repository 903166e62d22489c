#ifndef OPTIFORM_SEMIRING_H_
#define OPTIFORM_SEMIRING_H_

// c-semirings <A, +, x, 0, 1>: the boolean, fuzzy and weighted instances and
// their Cartesian products. Values are exact; there is no floating point.
//
// The preference order is a <= b iff a + b = b. It is exposed only through
// Leq/Less/Compare: the weighted order runs opposite to the numeric order of
// costs, and callers should never compare payloads directly.

#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optiform/common.h"

namespace optiform {

class SemiringSpec {
 public:
  enum class Kind { kBoolean, kFuzzy, kWeighted, kProduct };

  static SemiringSpec Boolean() { return SemiringSpec(Kind::kBoolean, {}); }
  static SemiringSpec Fuzzy() { return SemiringSpec(Kind::kFuzzy, {}); }
  static SemiringSpec Weighted() { return SemiringSpec(Kind::kWeighted, {}); }
  // Throws ValidationError for an empty factor list.
  static SemiringSpec Product(std::vector<SemiringSpec> factors);

  SemiringSpec() = default;

  Kind kind() const { return kind_; }
  const std::vector<SemiringSpec>& factors() const { return factors_; }

  // True for the three built-in carriers; products are only partially
  // ordered.
  bool is_linear() const { return kind_ != Kind::kProduct; }

  // "boolean", "fuzzy", "weighted", "product(weighted,weighted)".
  std::string ToString() const;

  bool operator==(const SemiringSpec&) const = default;

 private:
  SemiringSpec(Kind kind, std::vector<SemiringSpec> factors)
      : kind_(kind), factors_(std::move(factors)) {}

  Kind kind_ = Kind::kBoolean;
  std::vector<SemiringSpec> factors_;
};

class SemiringValue {
 public:
  enum class Tag { kBool, kNumber, kInfinity, kTuple };

  static SemiringValue Bool(bool b);
  static SemiringValue Number(Rational q);
  static SemiringValue Number(std::int64_t n) { return Number(Rational(n)); }
  static SemiringValue Number(std::int64_t num, std::int64_t den) {
    return Number(Rational(num, den));
  }
  static SemiringValue Infinity();
  static SemiringValue Tuple(std::vector<SemiringValue> items);

  SemiringValue() = default;

  Tag tag() const { return tag_; }
  bool is_bool() const { return tag_ == Tag::kBool; }
  bool is_number() const { return tag_ == Tag::kNumber; }
  bool is_infinity() const { return tag_ == Tag::kInfinity; }
  bool is_tuple() const { return tag_ == Tag::kTuple; }

  bool as_bool() const;
  const Rational& as_number() const;
  const std::vector<SemiringValue>& items() const;

  // "1", "2/5", "inf", "<7,0>". Booleans render as "0"/"1".
  std::string ToString() const;

  bool operator==(const SemiringValue& other) const;

 private:
  Tag tag_ = Tag::kBool;
  bool flag_ = false;
  Rational number_;
  std::vector<SemiringValue> items_;
};

// Exact parse of "3", "-2", "2/5", "0.4", "1e-1" style literals.
Rational ParseRational(std::string_view text);
// "3" or "p/q" in lowest terms.
std::string FormatRational(const Rational& q);

bool InCarrier(const SemiringSpec& spec, const SemiringValue& v);
// Throws CarrierError naming the offending product component, if any.
void RequireCarrier(const SemiringSpec& spec, const SemiringValue& v,
                    std::string_view context = "value");

SemiringValue Zero(const SemiringSpec& spec);
SemiringValue One(const SemiringSpec& spec);

// The combination operator x.
SemiringValue Combine(const SemiringSpec& spec, const SemiringValue& a,
                      const SemiringValue& b);
// The additive operator +; on linear carriers it picks the better value.
SemiringValue Sum(const SemiringSpec& spec, const SemiringValue& a,
                  const SemiringValue& b);

enum class PreferenceOrder { kWorse, kEqual, kBetter, kIncomparable };

// How `a` relates to `b`: kWorse means a < b in the induced order.
PreferenceOrder Compare(const SemiringSpec& spec, const SemiringValue& a,
                        const SemiringValue& b);
bool Leq(const SemiringSpec& spec, const SemiringValue& a,
         const SemiringValue& b);
bool Less(const SemiringSpec& spec, const SemiringValue& a,
          const SemiringValue& b);
bool Incomparable(const SemiringSpec& spec, const SemiringValue& a,
                  const SemiringValue& b);

// Whether a < b implies c x a < c x b for every c. Weighted: yes, over finite
// costs (infinity absorbs). Fuzzy, boolean: no. Products: no.
bool IsStrictlyMonotonic(const SemiringSpec& spec);

// ---------------------------------------------------------------------------
// Axiom checking.

struct AxiomViolation {
  std::string axiom;
  std::string witness;
};

// Anything shaped like a c-semiring. Used to check the built-in instances as
// well as hand-built operation tables.
template <typename A>
concept SemiringAlgebra = requires(const A& alg,
                                   const typename A::value_type& x) {
  { alg.Plus(x, x) } -> std::convertible_to<typename A::value_type>;
  { alg.Times(x, x) } -> std::convertible_to<typename A::value_type>;
  { alg.Zero() } -> std::convertible_to<typename A::value_type>;
  { alg.One() } -> std::convertible_to<typename A::value_type>;
  { alg.Format(x) } -> std::convertible_to<std::string>;
  { x == x } -> std::convertible_to<bool>;
};

// Checks every c-semiring axiom on all pairs and triples drawn from `sample`
// (plus 0 and 1). An empty result means no violation was found.
template <SemiringAlgebra A>
std::vector<AxiomViolation> ValidateAxioms(
    const A& alg, std::span<const typename A::value_type> sample) {
  using V = typename A::value_type;
  std::vector<V> xs(sample.begin(), sample.end());
  xs.push_back(alg.Zero());
  xs.push_back(alg.One());
  std::vector<AxiomViolation> out;
  auto fail = [&](const char* axiom, std::initializer_list<V> values) {
    std::string w;
    for (const V& v : values) {
      if (!w.empty()) w += ", ";
      w += alg.Format(v);
    }
    out.push_back({axiom, w});
  };
  const V zero = alg.Zero();
  const V one = alg.One();
  for (const V& a : xs) {
    if (!(alg.Plus(a, a) == a)) fail("+ idempotent", {a});
    if (!(alg.Plus(a, zero) == a)) fail("0 is the unit of +", {a});
    if (!(alg.Plus(a, one) == one)) fail("1 is absorbing for +", {a});
    if (!(alg.Times(a, one) == a)) fail("1 is the unit of x", {a});
    if (!(alg.Times(a, zero) == zero)) fail("0 is absorbing for x", {a});
    for (const V& b : xs) {
      if (!(alg.Plus(a, b) == alg.Plus(b, a))) fail("+ commutative", {a, b});
      if (!(alg.Times(a, b) == alg.Times(b, a))) fail("x commutative", {a, b});
      for (const V& c : xs) {
        if (!(alg.Plus(a, alg.Plus(b, c)) == alg.Plus(alg.Plus(a, b), c))) {
          fail("+ associative", {a, b, c});
        }
        if (!(alg.Times(a, alg.Times(b, c)) ==
              alg.Times(alg.Times(a, b), c))) {
          fail("x associative", {a, b, c});
        }
        if (!(alg.Times(a, alg.Plus(b, c)) ==
              alg.Plus(alg.Times(a, b), alg.Times(a, c)))) {
          fail("x distributes over +", {a, b, c});
        }
      }
    }
  }
  return out;
}

// Adapts a SemiringSpec to SemiringAlgebra.
class SpecAlgebra {
 public:
  using value_type = SemiringValue;
  explicit SpecAlgebra(SemiringSpec spec) : spec_(std::move(spec)) {}
  SemiringValue Plus(const SemiringValue& a, const SemiringValue& b) const {
    return Sum(spec_, a, b);
  }
  SemiringValue Times(const SemiringValue& a, const SemiringValue& b) const {
    return Combine(spec_, a, b);
  }
  SemiringValue Zero() const { return optiform::Zero(spec_); }
  SemiringValue One() const { return optiform::One(spec_); }
  std::string Format(const SemiringValue& v) const { return v.ToString(); }

 private:
  SemiringSpec spec_;
};

// Sample values must lie in the carrier of `spec` (CarrierError otherwise).
std::vector<AxiomViolation> ValidateAxioms(
    const SemiringSpec& spec, std::span<const SemiringValue> sample);

}  // namespace optiform

#endif  // OPTIFORM_SEMIRING_H_
