#include "optiform/semiring.h"

#include <cctype>
#include <charconv>

namespace optiform {

SemiringSpec SemiringSpec::Product(std::vector<SemiringSpec> factors) {
  if (factors.empty()) {
    throw ValidationError("product semiring needs at least one factor");
  }
  return SemiringSpec(Kind::kProduct, std::move(factors));
}

std::string SemiringSpec::ToString() const {
  switch (kind_) {
    case Kind::kBoolean:
      return "boolean";
    case Kind::kFuzzy:
      return "fuzzy";
    case Kind::kWeighted:
      return "weighted";
    case Kind::kProduct: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) s += ",";
        s += factors_[i].ToString();
      }
      return s + ")";
    }
  }
  return "?";
}

SemiringValue SemiringValue::Bool(bool b) {
  SemiringValue v;
  v.tag_ = Tag::kBool;
  v.flag_ = b;
  return v;
}

SemiringValue SemiringValue::Number(Rational q) {
  SemiringValue v;
  v.tag_ = Tag::kNumber;
  v.number_ = q;
  return v;
}

SemiringValue SemiringValue::Infinity() {
  SemiringValue v;
  v.tag_ = Tag::kInfinity;
  return v;
}

SemiringValue SemiringValue::Tuple(std::vector<SemiringValue> items) {
  SemiringValue v;
  v.tag_ = Tag::kTuple;
  v.items_ = std::move(items);
  return v;
}

bool SemiringValue::as_bool() const {
  if (tag_ != Tag::kBool) throw CarrierError("value is not boolean");
  return flag_;
}

const Rational& SemiringValue::as_number() const {
  if (tag_ != Tag::kNumber) throw CarrierError("value is not a number");
  return number_;
}

const std::vector<SemiringValue>& SemiringValue::items() const {
  if (tag_ != Tag::kTuple) throw CarrierError("value is not a tuple");
  return items_;
}

std::string SemiringValue::ToString() const {
  switch (tag_) {
    case Tag::kBool:
      return flag_ ? "1" : "0";
    case Tag::kNumber:
      return FormatRational(number_);
    case Tag::kInfinity:
      return "inf";
    case Tag::kTuple: {
      std::string s = "<";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) s += ",";
        s += items_[i].ToString();
      }
      return s + ">";
    }
  }
  return "?";
}

bool SemiringValue::operator==(const SemiringValue& other) const {
  if (tag_ != other.tag_) return false;
  switch (tag_) {
    case Tag::kBool:
      return flag_ == other.flag_;
    case Tag::kNumber:
      return number_ == other.number_;
    case Tag::kInfinity:
      return true;
    case Tag::kTuple:
      return items_ == other.items_;
  }
  return false;
}

namespace {

std::int64_t ParseInt(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ValidationError("malformed number '" + std::string(whole) + "'");
  }
  return value;
}

Rational PowerOfTen(int exponent, std::string_view whole) {
  if (exponent > 18) {
    throw ValidationError("number out of range '" + std::string(whole) + "'");
  }
  std::int64_t p = 1;
  for (int i = 0; i < exponent; ++i) p *= 10;
  return Rational(p);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ValidationError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = ParseInt(text.substr(0, slash), whole);
    std::int64_t den = ParseInt(text.substr(slash + 1), whole);
    if (den == 0) {
      throw ValidationError("zero denominator in '" + std::string(whole) + "'");
    }
    return Rational(num, den);
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = text.substr(e + 1);
    if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
    exponent = static_cast<int>(ParseInt(exp, whole));
    text = text.substr(0, e);
  }
  std::string digits;
  int fraction_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw ValidationError("malformed number '" + std::string(whole) + "'");
    }
  }
  if (digits.empty()) {
    throw ValidationError("malformed number '" + std::string(whole) + "'");
  }
  // Strip trailing zeros of the fraction to keep small magnitudes in range.
  while (fraction_digits > 0 && digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
    --fraction_digits;
  }
  if (digits.size() > 18) {
    throw ValidationError("number has too many digits '" + std::string(whole) +
                          "'");
  }
  Rational q(ParseInt(digits, whole));
  int shift = exponent - fraction_digits;
  if (shift >= 0) {
    q *= PowerOfTen(shift, whole);
  } else {
    q /= PowerOfTen(-shift, whole);
  }
  return negative ? -q : q;
}

std::string FormatRational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

bool InCarrierAt(const SemiringSpec& spec, const SemiringValue& v,
                 std::string& where) {
  switch (spec.kind()) {
    case SemiringSpec::Kind::kBoolean:
      return v.is_bool();
    case SemiringSpec::Kind::kFuzzy:
      return v.is_number() && v.as_number() >= Rational(0) &&
             v.as_number() <= Rational(1);
    case SemiringSpec::Kind::kWeighted:
      return v.is_infinity() || (v.is_number() && v.as_number() >= Rational(0));
    case SemiringSpec::Kind::kProduct: {
      if (!v.is_tuple() || v.items().size() != spec.factors().size()) {
        return false;
      }
      for (std::size_t i = 0; i < spec.factors().size(); ++i) {
        if (!InCarrierAt(spec.factors()[i], v.items()[i], where)) {
          where = "component " + std::to_string(i) +
                  (where.empty() ? "" : " / " + where);
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool InCarrier(const SemiringSpec& spec, const SemiringValue& v) {
  std::string where;
  return InCarrierAt(spec, v, where);
}

void RequireCarrier(const SemiringSpec& spec, const SemiringValue& v,
                    std::string_view context) {
  std::string where;
  if (!InCarrierAt(spec, v, where)) {
    std::string msg = std::string(context) + " " + v.ToString() +
                      " is not in the " + spec.ToString() + " carrier";
    if (!where.empty()) msg += " (" + where + ")";
    throw CarrierError(msg);
  }
}

SemiringValue Zero(const SemiringSpec& spec) {
  switch (spec.kind()) {
    case SemiringSpec::Kind::kBoolean:
      return SemiringValue::Bool(false);
    case SemiringSpec::Kind::kFuzzy:
      return SemiringValue::Number(0);
    case SemiringSpec::Kind::kWeighted:
      return SemiringValue::Infinity();
    case SemiringSpec::Kind::kProduct: {
      std::vector<SemiringValue> items;
      for (const SemiringSpec& f : spec.factors()) items.push_back(Zero(f));
      return SemiringValue::Tuple(std::move(items));
    }
  }
  return {};
}

SemiringValue One(const SemiringSpec& spec) {
  switch (spec.kind()) {
    case SemiringSpec::Kind::kBoolean:
      return SemiringValue::Bool(true);
    case SemiringSpec::Kind::kFuzzy:
      return SemiringValue::Number(1);
    case SemiringSpec::Kind::kWeighted:
      return SemiringValue::Number(0);
    case SemiringSpec::Kind::kProduct: {
      std::vector<SemiringValue> items;
      for (const SemiringSpec& f : spec.factors()) items.push_back(One(f));
      return SemiringValue::Tuple(std::move(items));
    }
  }
  return {};
}

namespace {

// Numeric "a is at most as preferred as b" for the linear carriers.
bool LinearLeq(const SemiringSpec& spec, const SemiringValue& a,
               const SemiringValue& b) {
  switch (spec.kind()) {
    case SemiringSpec::Kind::kBoolean:
      return !a.as_bool() || b.as_bool();
    case SemiringSpec::Kind::kFuzzy:
      return a.as_number() <= b.as_number();
    case SemiringSpec::Kind::kWeighted:
      // Higher cost is worse; infinity is the worst.
      if (a.is_infinity()) return true;
      if (b.is_infinity()) return false;
      return b.as_number() <= a.as_number();
    case SemiringSpec::Kind::kProduct:
      break;
  }
  throw CarrierError("not a linear carrier");
}

void CheckPair(const SemiringSpec& spec, const SemiringValue& a,
               const SemiringValue& b) {
  RequireCarrier(spec, a, "left operand");
  RequireCarrier(spec, b, "right operand");
}

SemiringValue CombineUnchecked(const SemiringSpec& spec, const SemiringValue& a,
                               const SemiringValue& b) {
  switch (spec.kind()) {
    case SemiringSpec::Kind::kBoolean:
      return SemiringValue::Bool(a.as_bool() && b.as_bool());
    case SemiringSpec::Kind::kFuzzy:
      return SemiringValue::Number(std::min(a.as_number(), b.as_number()));
    case SemiringSpec::Kind::kWeighted:
      if (a.is_infinity() || b.is_infinity()) return SemiringValue::Infinity();
      return SemiringValue::Number(a.as_number() + b.as_number());
    case SemiringSpec::Kind::kProduct: {
      std::vector<SemiringValue> items;
      items.reserve(spec.factors().size());
      for (std::size_t i = 0; i < spec.factors().size(); ++i) {
        items.push_back(
            CombineUnchecked(spec.factors()[i], a.items()[i], b.items()[i]));
      }
      return SemiringValue::Tuple(std::move(items));
    }
  }
  return {};
}

SemiringValue SumUnchecked(const SemiringSpec& spec, const SemiringValue& a,
                           const SemiringValue& b) {
  if (spec.kind() == SemiringSpec::Kind::kProduct) {
    std::vector<SemiringValue> items;
    items.reserve(spec.factors().size());
    for (std::size_t i = 0; i < spec.factors().size(); ++i) {
      items.push_back(
          SumUnchecked(spec.factors()[i], a.items()[i], b.items()[i]));
    }
    return SemiringValue::Tuple(std::move(items));
  }
  return LinearLeq(spec, a, b) ? b : a;
}

PreferenceOrder CompareUnchecked(const SemiringSpec& spec,
                                 const SemiringValue& a,
                                 const SemiringValue& b) {
  if (spec.kind() != SemiringSpec::Kind::kProduct) {
    bool le = LinearLeq(spec, a, b);
    bool ge = LinearLeq(spec, b, a);
    if (le && ge) return PreferenceOrder::kEqual;
    return le ? PreferenceOrder::kWorse : PreferenceOrder::kBetter;
  }
  bool some_worse = false;
  bool some_better = false;
  for (std::size_t i = 0; i < spec.factors().size(); ++i) {
    switch (CompareUnchecked(spec.factors()[i], a.items()[i], b.items()[i])) {
      case PreferenceOrder::kWorse:
        some_worse = true;
        break;
      case PreferenceOrder::kBetter:
        some_better = true;
        break;
      case PreferenceOrder::kIncomparable:
        some_worse = some_better = true;
        break;
      case PreferenceOrder::kEqual:
        break;
    }
  }
  if (some_worse && some_better) return PreferenceOrder::kIncomparable;
  if (some_worse) return PreferenceOrder::kWorse;
  if (some_better) return PreferenceOrder::kBetter;
  return PreferenceOrder::kEqual;
}

}  // namespace

SemiringValue Combine(const SemiringSpec& spec, const SemiringValue& a,
                      const SemiringValue& b) {
  CheckPair(spec, a, b);
  return CombineUnchecked(spec, a, b);
}

SemiringValue Sum(const SemiringSpec& spec, const SemiringValue& a,
                  const SemiringValue& b) {
  CheckPair(spec, a, b);
  return SumUnchecked(spec, a, b);
}

PreferenceOrder Compare(const SemiringSpec& spec, const SemiringValue& a,
                        const SemiringValue& b) {
  CheckPair(spec, a, b);
  return CompareUnchecked(spec, a, b);
}

bool Leq(const SemiringSpec& spec, const SemiringValue& a,
         const SemiringValue& b) {
  PreferenceOrder o = Compare(spec, a, b);
  return o == PreferenceOrder::kWorse || o == PreferenceOrder::kEqual;
}

bool Less(const SemiringSpec& spec, const SemiringValue& a,
          const SemiringValue& b) {
  return Compare(spec, a, b) == PreferenceOrder::kWorse;
}

bool Incomparable(const SemiringSpec& spec, const SemiringValue& a,
                  const SemiringValue& b) {
  return Compare(spec, a, b) == PreferenceOrder::kIncomparable;
}

bool IsStrictlyMonotonic(const SemiringSpec& spec) {
  return spec.kind() == SemiringSpec::Kind::kWeighted;
}

std::vector<AxiomViolation> ValidateAxioms(
    const SemiringSpec& spec, std::span<const SemiringValue> sample) {
  for (const SemiringValue& v : sample) RequireCarrier(spec, v, "sample");
  return ValidateAxioms(SpecAlgebra(spec), sample);
}

}  // namespace optiform
