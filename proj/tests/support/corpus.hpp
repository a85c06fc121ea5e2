#pragma once

// Shared fixtures: the 9-trial reference instance and seeded random-instance
// generators used by the property tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "lsp/instance.hpp"
#include "lsp/numeric.hpp"
#include "lsp/rational.hpp"

namespace corpus {

// p = [1/6, 1/10, 1/12, 1/3, 1/12, 1/10, 1/5, 1/10, 1/12]
// w = [7, 4, 9, 10, 6, 3, 9, 9, 1]
// Optimal expected profit 6721/2000, stopping set {4,5,7,8,9}.
template <class T>
lsp::ProblemInstance<T> example9() {
  using nt = lsp::numeric_traits<T>;
  std::vector<T> p = {nt::ratio(1, 6),  nt::ratio(1, 10), nt::ratio(1, 12),
                      nt::ratio(1, 3),  nt::ratio(1, 12), nt::ratio(1, 10),
                      nt::ratio(1, 5),  nt::ratio(1, 10), nt::ratio(1, 12)};
  std::vector<T> w = {nt::ratio(7, 1), nt::ratio(4, 1), nt::ratio(9, 1),
                      nt::ratio(10, 1), nt::ratio(6, 1), nt::ratio(3, 1),
                      nt::ratio(9, 1), nt::ratio(9, 1), nt::ratio(1, 1)};
  return lsp::ProblemInstance<T>(std::move(p), std::move(w));
}

inline const lsp::Rational& example9_profit() {
  static const lsp::Rational v(6721, 2000);
  return v;
}

inline const std::vector<int>& example9_stopping_set() {
  static const std::vector<int> s = {4, 5, 7, 8, 9};
  return s;
}

struct RandomOptions {
  int min_n = 1;
  int max_n = 12;
  bool allow_p_one = false;
  bool allow_p_zero = true;
  int max_denominator = 12;
};

/// Fraction-valued instance with p_k in [0,1] (optionally including the
/// endpoints) and strictly positive fractional payoffs.
inline lsp::ProblemInstance<lsp::Rational> random_rational_instance(std::mt19937_64& rng,
                                                                    const RandomOptions& opt = {}) {
  std::uniform_int_distribution<int> n_dist(opt.min_n, opt.max_n);
  std::uniform_int_distribution<int> den_dist(1, opt.max_denominator);
  const int n = n_dist(rng);
  std::vector<lsp::Rational> p, w;
  for (int k = 0; k < n; ++k) {
    int den = den_dist(rng);
    int lo = opt.allow_p_zero ? 0 : 1;
    int hi = opt.allow_p_one ? den : den - 1;
    if (hi < lo) hi = lo;
    std::uniform_int_distribution<int> num_dist(lo, hi);
    p.emplace_back(num_dist(rng), den);
    std::uniform_int_distribution<int> wnum(1, 60);
    std::uniform_int_distribution<int> wden(1, 6);
    w.emplace_back(wnum(rng), wden(rng));
  }
  return lsp::ProblemInstance<lsp::Rational>(std::move(p), std::move(w));
}

/// Float instance with p strictly inside (0,1) unless told otherwise.
inline lsp::ProblemInstance<double> random_float_instance(std::mt19937_64& rng, int min_n = 1, int max_n = 12,
                                                          double p_lo = 0.01, double p_hi = 0.95) {
  std::uniform_int_distribution<int> n_dist(min_n, max_n);
  std::uniform_real_distribution<double> p_dist(p_lo, p_hi);
  std::uniform_real_distribution<double> w_dist(0.1, 20.0);
  const int n = n_dist(rng);
  std::vector<double> p, w;
  for (int k = 0; k < n; ++k) {
    p.push_back(p_dist(rng));
    w.push_back(w_dist(rng));
  }
  return lsp::ProblemInstance<double>(std::move(p), std::move(w));
}

template <class T>
lsp::ProblemInstance<T> scale_payoffs(const lsp::ProblemInstance<T>& inst, const T& factor) {
  std::vector<T> w = inst.payoffs();
  for (auto& v : w) v = v * factor;
  return lsp::ProblemInstance<T>(inst.probabilities(), std::move(w));
}

}  // namespace corpus
