// SPDX-License-Identifier: Apache-2.0
#include "qpvar/rational.hpp"

#include <cctype>

namespace qpvar {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw PreconditionError("invalid rational string: \"" + text + "\"");
  boost::multiprecision::cpp_int d(den);
  if (d == 0)
    throw PreconditionError("zero denominator in rational string: \"" + text + "\"");
  Rational r(boost::multiprecision::cpp_int(num), d);
  return negative ? -r : r;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

ExtReal parse_ext_real(const std::string& text) {
  if (text == "inf") return ExtReal::infinity();
  return ExtReal(parse_rational(text));
}

}  // namespace qpvar
