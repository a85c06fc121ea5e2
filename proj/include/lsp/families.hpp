#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lsp/instance.hpp"
#include "lsp/numeric.hpp"
#include "lsp/odds.hpp"

namespace lsp {

/// The four application families:
///   Duration          p_k = 1/k,  w_k = n-k+1   ("duration")
///   MinimalDuration   p_k = 1/k,  w_k = k       ("minimal-duration")
///   UniformSmallP     p_k = 1/n,  w_k = k       ("uniform-small-p")
///   ConstantP         p_k = p,    w_k = n-k+1   ("constant-p", 0 < p < 1)
enum class Family { Duration, MinimalDuration, UniformSmallP, ConstantP };

struct FamilySpec {
  Family family = Family::Duration;
  std::int64_t n = 1;
  Rational p;  // ConstantP only

  static FamilySpec duration(std::int64_t n) { return {Family::Duration, n, Rational()}; }
  static FamilySpec minimal_duration(std::int64_t n) { return {Family::MinimalDuration, n, Rational()}; }
  static FamilySpec uniform_small_p(std::int64_t n) { return {Family::UniformSmallP, n, Rational()}; }
  static FamilySpec constant_p(std::int64_t n, Rational p) { return {Family::ConstantP, n, std::move(p)}; }
};

inline const char* family_cli_name(Family f) {
  switch (f) {
    case Family::Duration: return "duration";
    case Family::MinimalDuration: return "minimal-duration";
    case Family::UniformSmallP: return "uniform-small-p";
    case Family::ConstantP: return "constant-p";
  }
  return "unknown";
}

inline Family family_from_name(const std::string& name) {
  if (name == "duration") return Family::Duration;
  if (name == "minimal-duration") return Family::MinimalDuration;
  if (name == "uniform-small-p") return Family::UniformSmallP;
  if (name == "constant-p") return Family::ConstantP;
  throw Error(Errc::UnsupportedFamily, "unknown family '" + name + "'");
}

namespace detail {

inline void check_family_spec(const FamilySpec& spec) {
  if (spec.n < 1) throw Error(Errc::EmptyInstance, "family size n must be >= 1");
  if (spec.family == Family::ConstantP && !(spec.p > 0 && spec.p < 1))
    throw Error(Errc::ProbabilityOutOfRange, "constant-p requires 0 < p < 1");
}

}  // namespace detail

/// Materializes the family's p and w sequences exactly (fractions in exact
/// mode, correctly rounded binary64 in float mode).
template <class T>
ProblemInstance<T> instantiate(const FamilySpec& spec) {
  using nt = numeric_traits<T>;
  detail::check_family_spec(spec);
  const std::int64_t n = spec.n;
  std::vector<T> p, w;
  p.reserve(static_cast<std::size_t>(n));
  w.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    switch (spec.family) {
      case Family::Duration:
        p.push_back(nt::ratio(1, k));
        w.push_back(nt::ratio(n - k + 1, 1));
        break;
      case Family::MinimalDuration:
        p.push_back(nt::ratio(1, k));
        w.push_back(nt::ratio(k, 1));
        break;
      case Family::UniformSmallP:
        p.push_back(nt::ratio(1, n));
        w.push_back(nt::ratio(k, 1));
        break;
      case Family::ConstantP:
        p.push_back(nt::from_rational(spec.p));
        w.push_back(nt::ratio(n - k + 1, 1));
        break;
    }
  }
  return ProblemInstance<T>(std::move(p), std::move(w));
}

namespace detail {

/// Exact harmonic sums are used up to this size; larger thresholds fall back
/// to compensated binary64 summation.
inline constexpr std::int64_t kExactHarmonicLimit = 2000;

/// Backward scan for the two p_k = 1/k families. The odds condition at k
/// (for k >= 2, where every term is finite) reduces to
///   Duration:        H(n-1) - H(k-2) >= (2n - 2k + 3)/n
///   MinimalDuration: H(n-1) - H(k-2) >= 2k - n - 2
/// and k = 1 always qualifies through the infinite r_1 term (p_1 = 1).
template <class Cond>
std::int64_t harmonic_threshold_scan_exact(std::int64_t n, Cond condition) {
  Rational h_n1(0);  // H(n-1)
  for (std::int64_t i = 1; i <= n - 1; ++i) h_n1 += Rational(1, i);
  Rational h_k2 = h_n1 - Rational(1, n - 1);  // H(n-2) for the first iteration k = n
  for (std::int64_t k = n; k >= 2; --k) {
    if (condition(k, Rational(h_n1 - h_k2))) return k;
    if (k - 2 >= 1) h_k2 -= Rational(1, k - 2);
  }
  return 1;
}

template <class Cond>
std::int64_t harmonic_threshold_scan_float(std::int64_t n, Cond condition) {
  CompensatedSum<double> h;
  for (std::int64_t i = 1; i <= n - 2; ++i) h.add(1.0 / static_cast<double>(i));
  double h_k2 = h.total();  // H(n-2)
  double h_n1 = h_k2 + (n >= 2 ? 1.0 / static_cast<double>(n - 1) : 0.0);
  for (std::int64_t k = n; k >= 2; --k) {
    if (condition(k, h_n1 - h_k2)) return k;
    if (k - 2 >= 1) h_k2 -= 1.0 / static_cast<double>(k - 2);
  }
  return 1;
}

}  // namespace detail

/// Optimal threshold s_n from the family's published condition or formula:
/// harmonic-condition backward scans for the 1/k families, the floor formula
/// floor((3 - 2n + sqrt(1 + 8 n^2))/2) for uniform-small-p (evaluated in
/// exact integer arithmetic), and floor(3 + n - 2/p) with fallback 1 for
/// constant-p.
inline std::int64_t closed_form_threshold(const FamilySpec& spec) {
  detail::check_family_spec(spec);
  const std::int64_t n = spec.n;
  if (n == 1) return 1;
  switch (spec.family) {
    case Family::Duration: {
      if (n <= detail::kExactHarmonicLimit)
        return detail::harmonic_threshold_scan_exact(
            n, [n](std::int64_t k, const Rational& h) { return h >= Rational(2 * n - 2 * k + 3, n); });
      return detail::harmonic_threshold_scan_float(n, [n](std::int64_t k, double h) {
        return h >= static_cast<double>(2 * n - 2 * k + 3) / static_cast<double>(n);
      });
    }
    case Family::MinimalDuration: {
      if (n <= detail::kExactHarmonicLimit)
        return detail::harmonic_threshold_scan_exact(
            n, [n](std::int64_t k, const Rational& h) { return h >= Rational(2 * k - n - 2); });
      return detail::harmonic_threshold_scan_float(
          n, [n](std::int64_t k, double h) { return h >= static_cast<double>(2 * k - n - 2); });
    }
    case Family::UniformSmallP: {
      // floor((3 - 2n + sqrt(1 + 8n^2))/2); the integer sqrt may replace the
      // real one inside the floor because no new integer can appear between
      // them.
      BigInt disc = 8 * BigInt(n) * BigInt(n) + 1;
      BigInt root = boost::multiprecision::sqrt(disc);
      BigInt num = 3 - 2 * BigInt(n) + root;
      BigInt s = (num >= 0) ? BigInt(num / 2) : BigInt(-((-num + 1) / 2));
      return s.convert_to<std::int64_t>();
    }
    case Family::ConstantP: {
      // n > 2(1-p)/p  <=>  p(n+2) > 2.
      if (spec.p * (n + 2) > 2) {
        Rational expr = Rational(n + 3) - Rational(2) / spec.p;
        return rational_floor(expr).convert_to<std::int64_t>();
      }
      return 1;
    }
  }
  throw Error(Errc::UnsupportedFamily, "unhandled family");
}

/// Closed-form expected profit, available for constant-p only:
///   E_n = (c-1)(c-2)(1-p)^{c-3} p / 2   with c = ceil(2/p),  if n > 2(1-p)/p
///   E_n = n(n+1)(1-p)^{n-1} p / 2                            otherwise.
/// (For 2/p integral, c = 2/p and the first branch matches the floor form.)
inline Rational closed_form_value(const FamilySpec& spec) {
  detail::check_family_spec(spec);
  if (spec.family != Family::ConstantP)
    throw Error(Errc::UnsupportedFamily,
                std::string("closed-form value exists only for constant-p, not ") + family_cli_name(spec.family));
  const std::int64_t n = spec.n;
  const Rational& p = spec.p;
  const Rational q = 1 - p;
  if (p * (n + 2) > 2) {
    std::int64_t c = rational_ceil(Rational(2) / p).convert_to<std::int64_t>();
    return Rational(c - 1) * Rational(c - 2) * rational_pow(q, c - 3) * p / 2;
  }
  return Rational(n) * Rational(n + 1) * rational_pow(q, n - 1) * p / 2;
}

/// Unique root of 2 - 2x + log x = 0 in (0,1): bracketed bisection plus a
/// Newton polish, absolute tolerance 1e-12.
inline double rumor_constant() {
  auto f = [](double x) { return 2.0 - 2.0 * x + std::log(x); };
  double lo = 1e-12, hi = 0.5;  // f(lo) < 0 < f(hi); the root at x = 1 is outside
  for (int i = 0; i < 80 && hi - lo > 1e-13; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) x -= f(x) / (-2.0 + 1.0 / x);
  return x;
}

/// Principal-branch Lambert W by Halley iteration; domain restricted to
/// z >= -1/e. Used as the independent evaluation path for rumour's constant
/// via -W(-2 e^{-2})/2.
inline double lambert_w0(double z) {
  constexpr double kInvE = 0.36787944117144233;
  if (z < -kInvE) throw Error(Errc::ParseError, "lambert_w0 domain is z >= -1/e");
  if (z == 0.0) return 0.0;
  double w = (z < 1.0) ? z * (1.0 - z) : std::log(z);
  if (w <= -1.0) w = -0.99;
  for (int i = 0; i < 64; ++i) {
    double ew = std::exp(w);
    double fw = w * ew - z;
    double step = fw / (ew * (w + 1.0) - (w + 2.0) * fw / (2.0 * w + 2.0));
    w -= step;
    if (std::fabs(step) < 1e-15 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

struct AsymptoticRow {
  std::int64_t n = 0;
  std::int64_t s = 0;
  double s_over_n = 0.0;
  double value = 0.0;
  double value_over_n = 0.0;
};

/// Convergence table (n, s_n, s_n/n, E_n, E_n/n) along an ascending grid,
/// evaluated in float mode through the generic odds machinery.
inline std::vector<AsymptoticRow> asymptotic_report(const FamilySpec& spec,
                                                    const std::vector<std::int64_t>& n_grid,
                                                    std::int64_t cap = 1000000) {
  detail::check_family_spec(spec);
  std::vector<AsymptoticRow> rows;
  std::int64_t prev = 0;
  for (std::int64_t n : n_grid) {
    if (n <= prev) throw Error(Errc::ParseError, "n grid must be strictly ascending");
    prev = n;
    if (n > cap)
      throw Error(Errc::InstanceTooLarge, "grid point " + std::to_string(n) + " above cap " + std::to_string(cap));
    FamilySpec point = spec;
    point.n = n;
    ProblemInstance<double> inst = instantiate<double>(point);
    AsymptoticRow row;
    row.n = n;
    row.s = odds_index(inst);
    row.s_over_n = static_cast<double>(row.s) / static_cast<double>(n);
    row.value = odds_value(inst, static_cast<int>(row.s));
    row.value_over_n = row.value / static_cast<double>(n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lsp
