#pragma once

#include <cmath>
#include <cstdint>

#include "lsp/rational.hpp"

namespace lsp {

/// Per-scalar-type policy. Two modes exist: exact rationals (Rational) and
/// binary64 (double). Decision comparisons (E_Stop vs E_Keep and the sign
/// assignment derived from them) go through decision_sign so that float mode
/// treats |d| < 1e-12 as a tie, which the stopping rule resolves as
/// "continue".
template <class T>
struct numeric_traits;

template <>
struct numeric_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr double decision_eps = 1e-12;

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double ratio(std::int64_t num, std::int64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_rational(const Rational& q) { return q.convert_to<double>(); }
  static double to_double(double v) { return v; }
  static bool finite(double v) { return std::isfinite(v); }
  static int decision_sign(double d) {
    if (std::fabs(d) < decision_eps) return 0;
    return d > 0 ? 1 : -1;
  }
};

template <>
struct numeric_traits<Rational> {
  static constexpr bool is_exact = true;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }
  static Rational from_rational(const Rational& q) { return q; }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static bool finite(const Rational&) { return true; }
  static int decision_sign(const Rational& d) { return d.sign(); }
};

/// Kahan-compensated accumulator in float mode, plain sum in exact mode.
template <class T>
class CompensatedSum;

template <>
class CompensatedSum<double> {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double total() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <>
class CompensatedSum<Rational> {
 public:
  void add(const Rational& x) { sum_ += x; }
  const Rational& total() const { return sum_; }

 private:
  Rational sum_ = Rational(0);
};

}  // namespace lsp
