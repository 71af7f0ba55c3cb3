// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace qpvar {

/// Exact rational number. Always stored in canonical reduced form with a
/// positive denominator; all arithmetic in the library is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when user-supplied input violates an operation precondition.
/// The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p", "-p" or "p/q" with q > 0. Rejects anything else
/// (decimals, whitespace, "inf").
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

/// A rational extended with +infinity. Ordering is total with
/// Finite(a) < +inf for every a; addition absorbs into +inf.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(Rational v) : value_(std::move(v)) {}
  ExtReal(long v) : value_(Rational(v)) {}
  static ExtReal infinity() { return ExtReal(Inf{}); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  /// Finite value; throws std::logic_error on +inf.
  const Rational& value() const {
    if (!value_) throw std::logic_error("ExtReal: value() on +inf");
    return *value_;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (!a.value_) return false;            // +inf < anything is false
    if (!b.value_) return true;             // finite < +inf
    return *a.value_ < *b.value_;
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (!a.value_ || !b.value_) return infinity();
    return ExtReal(*a.value_ + *b.value_);
  }
  friend ExtReal operator+(const ExtReal& a, const Rational& b) { return a + ExtReal(b); }

  /// Finite subtraction only; +inf operands are a logic error here.
  friend Rational operator-(const ExtReal& a, const ExtReal& b) {
    return a.value() - b.value();
  }

  std::string str() const { return value_ ? format_rational(*value_) : "inf"; }

 private:
  struct Inf {};
  explicit ExtReal(Inf) : value_(std::nullopt) {}
  std::optional<Rational> value_ = Rational(0);
};

/// Parses the objective-value grammar: a rational string or "inf".
ExtReal parse_ext_real(const std::string& text);

}  // namespace qpvar
