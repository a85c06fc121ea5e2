#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "lsp/errors.hpp"

namespace lsp {

/// Arbitrary-precision fraction used by the exact numeric mode. Always kept
/// canonical (reduced, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer <= q.
inline BigInt rational_floor(const Rational& q) {
  BigInt n = rational_num(q), d = rational_den(q);
  BigInt quo = n / d;  // truncates toward zero
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

/// Smallest integer >= q.
inline BigInt rational_ceil(const Rational& q) { return -rational_floor(-q); }

/// base^e with integer e (negative e inverts; base must be nonzero then).
inline Rational rational_pow(Rational base, long e) {
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k != 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) {
    if (acc == 0) throw Error(Errc::ParseError, "zero base with negative exponent");
    acc = Rational(1) / acc;
  }
  return acc;
}

/// "a/b" for proper fractions, plain "a" for integers.
inline std::string format_rational(const Rational& q) {
  BigInt n = rational_num(q), d = rational_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

/// Shortest decimal string that round-trips through binary64.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace detail {

inline bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// One parsed numeric literal. `exact` is set for integers and "a/b"
/// fractions; decimal literals are carried as binary64 only and force the
/// whole instance into float mode.
struct ParsedScalar {
  bool exact = false;
  Rational value;   // meaningful when exact
  double approx = 0.0;  // always set

  static ParsedScalar from_rational(Rational q) {
    ParsedScalar s;
    s.exact = true;
    s.approx = q.template convert_to<double>();
    s.value = std::move(q);
    return s;
  }
  static ParsedScalar from_double(double x) {
    ParsedScalar s;
    s.exact = false;
    s.approx = x;
    return s;
  }
};

/// Parses "a/b", integer, or decimal tokens. Throws Errc::ParseError on
/// anything else (including "a/0").
inline ParsedScalar parse_scalar(std::string_view token) {
  std::string_view t = detail::trim(token);
  if (t.empty()) throw Error(Errc::ParseError, "empty numeric token");
  auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = detail::trim(t.substr(0, slash));
    std::string_view ds = detail::trim(t.substr(slash + 1));
    if (!detail::is_integer_token(ns) || !detail::is_integer_token(ds))
      throw Error(Errc::ParseError, "malformed fraction '" + std::string(token) + "'");
    BigInt num{std::string(ns)};
    BigInt den{std::string(ds)};
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(token) + "'");
    return ParsedScalar::from_rational(Rational(num, den));
  }
  if (detail::is_integer_token(t)) return ParsedScalar::from_rational(Rational(BigInt(std::string(t))));
  // Decimal or scientific literal: binary64, forces float mode.
  std::string buf(t);
  char* end = nullptr;
  double x = std::strtod(buf.c_str(), &end);
  if (end == nullptr || *end != '\0' || end == buf.c_str())
    throw Error(Errc::ParseError, "unparseable number '" + std::string(token) + "'");
  return ParsedScalar::from_double(x);
}

}  // namespace lsp
