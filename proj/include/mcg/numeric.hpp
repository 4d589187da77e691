// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCG_NUMERIC_HPP
#define MCG_NUMERIC_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcg/errors.hpp"

namespace mcg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Absolute tolerance for comparisons that involve a floating-point value.
inline constexpr double kDefaultTolerance = 1e-9;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts integers ("-4"), fractions ("3/2") and plain decimals ("0.25").
// Decimals are converted exactly.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto parse_int = [](std::string_view s) -> std::optional<BigInt> {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return std::nullopt;
    }
    BigInt v(std::string(s[0] == '+' ? s.substr(1) : s));
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) {
      return std::nullopt;
    }
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    auto w = parse_int(digits);
    if (!w) return std::nullopt;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt f(std::string{frac});
    BigInt magnitude = (*w < 0 ? BigInt(-*w) : *w) * scale + f;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  auto v = parse_int(text);
  if (!v) return std::nullopt;
  return Rational(*v);
}

inline Rational parse_rational_or_throw(std::string_view text) {
  auto r = parse_rational(text);
  if (!r) throw DomainError("not a rational literal: '" + std::string(text) + "'");
  return *r;
}

// Exact p-th root of a nonnegative integer, if there is one.
inline std::optional<BigInt> exact_integer_root(const BigInt& value, unsigned p) {
  if (value < 0) return std::nullopt;
  if (value < 2 || p == 1) return value;
  BigInt lo = 0;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, p) <= value) hi *= 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, p) <= value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (boost::multiprecision::pow(lo, p) == value) return lo;
  return std::nullopt;
}

inline std::optional<Rational> exact_root(const Rational& value, unsigned p) {
  auto n = exact_integer_root(numerator(value), p);
  if (!n) return std::nullopt;
  auto d = exact_integer_root(denominator(value), p);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

// A cost value: an exact rational whenever the formula producing it is closed
// over the rationals, otherwise a double compared up to a tolerance.
class CostValue {
 public:
  CostValue() : value_(Rational(0)) {}
  CostValue(Rational r) : value_(std::move(r)) {}  // NOLINT: implicit by design of the value type
  CostValue(int v) : value_(Rational(v)) {}        // NOLINT

  static CostValue approx(double d) {
    CostValue c;
    c.value_ = d;
    return c;
  }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  const Rational& exact() const {
    if (!is_exact()) throw ContractError("cost value is not exact");
    return std::get<Rational>(value_);
  }

  double to_double() const {
    if (is_exact()) return std::get<Rational>(value_).convert_to<double>();
    return std::get<double>(value_);
  }

  std::string str() const {
    if (is_exact()) return to_string(std::get<Rational>(value_));
    std::ostringstream out;
    out.precision(17);
    out << std::get<double>(value_);
    return out.str();
  }

  // Structural equality: same representation and same value.
  friend bool operator==(const CostValue&, const CostValue&) = default;

  friend CostValue operator+(const CostValue& a, const CostValue& b) {
    if (a.is_exact() && b.is_exact()) return CostValue(a.exact() + b.exact());
    return approx(a.to_double() + b.to_double());
  }
  friend CostValue operator-(const CostValue& a, const CostValue& b) {
    if (a.is_exact() && b.is_exact()) return CostValue(a.exact() - b.exact());
    return approx(a.to_double() - b.to_double());
  }
  friend CostValue operator*(const CostValue& a, const CostValue& b) {
    if (a.is_exact() && b.is_exact()) return CostValue(a.exact() * b.exact());
    return approx(a.to_double() * b.to_double());
  }
  CostValue& operator+=(const CostValue& other) { return *this = *this + other; }

 private:
  std::variant<Rational, double> value_;
};

// Three-way comparison under the numeric policy: exact when both sides are
// exact, otherwise values within `tolerance` are equivalent.
inline std::weak_ordering compare(const CostValue& a, const CostValue& b,
                                  double tolerance = kDefaultTolerance) {
  if (a.is_exact() && b.is_exact()) {
    const Rational& x = a.exact();
    const Rational& y = b.exact();
    if (x < y) return std::weak_ordering::less;
    if (y < x) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }
  double x = a.to_double();
  double y = b.to_double();
  if (std::fabs(x - y) <= tolerance) return std::weak_ordering::equivalent;
  return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
}

inline bool less_than(const CostValue& a, const CostValue& b,
                      double tolerance = kDefaultTolerance) {
  return compare(a, b, tolerance) == std::weak_ordering::less;
}

inline const CostValue& max_of(const CostValue& a, const CostValue& b,
                               double tolerance = kDefaultTolerance) {
  return less_than(a, b, tolerance) ? b : a;
}

inline CostValue power(const CostValue& base, unsigned exponent) {
  if (base.is_exact()) {
    const Rational& b = base.exact();
    return CostValue(Rational(boost::multiprecision::pow(numerator(b), exponent),
                              boost::multiprecision::pow(denominator(b), exponent)));
  }
  return CostValue::approx(std::pow(base.to_double(), static_cast<double>(exponent)));
}

}  // namespace mcg

#endif  // MCG_NUMERIC_HPP
