#pragma once

#include "lsp/numeric.hpp"

namespace lsp {

/// Finite value or +infinity. Infinity enters only through odds ratios
/// r_k = p_k/(1-p_k) at p_k = 1; keeping it as a tagged value avoids IEEE
/// inf/nan arithmetic in float mode and gives rational mode an infinity it
/// otherwise lacks.
template <class T>
struct ExtendedReal {
  T value{};
  bool infinite = false;

  ExtendedReal() : value(numeric_traits<T>::zero()) {}
  explicit ExtendedReal(T v) : value(std::move(v)) {}

  static ExtendedReal infinity() {
    ExtendedReal e;
    e.infinite = true;
    return e;
  }

  ExtendedReal& operator+=(const ExtendedReal& o) {
    if (o.infinite) infinite = true;
    if (!infinite) value += o.value;
    return *this;
  }
  friend ExtendedReal operator+(ExtendedReal a, const ExtendedReal& b) {
    a += b;
    return a;
  }

  /// self >= x for finite x; infinity dominates every finite threshold.
  bool at_least(const T& x) const { return infinite || value >= x; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
};

/// r = p/(1-p), with p = 1 mapping to +infinity.
template <class T>
ExtendedReal<T> odds_ratio(const T& p) {
  if (p == numeric_traits<T>::one()) return ExtendedReal<T>::infinity();
  return ExtendedReal<T>(p / (numeric_traits<T>::one() - p));
}

}  // namespace lsp
