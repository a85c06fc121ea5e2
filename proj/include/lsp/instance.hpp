#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lsp/errors.hpp"
#include "lsp/numeric.hpp"

namespace lsp {

/// One weighted last-success problem: n independent Bernoulli trials with
/// success probabilities p_1..p_n and payoffs w_1..w_n for stopping on the
/// last success. Indexing is 1-based everywhere; slot 0 is reserved for the
/// auxiliary w_0 := 0 and E_Keep(0) conventions.
///
/// Immutable after construction; construction validates and never clamps.
template <class T>
class ProblemInstance {
 public:
  ProblemInstance(std::vector<T> p, std::vector<T> w) : p_(std::move(p)), w_(std::move(w)) {
    using nt = numeric_traits<T>;
    if (p_.size() != w_.size())
      throw Error(Errc::LengthMismatch, "p has " + std::to_string(p_.size()) + " entries, w has " +
                                            std::to_string(w_.size()));
    if (p_.empty()) throw Error(Errc::EmptyInstance, "n = 0");
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const T& v = p_[i];
      if (!nt::finite(v) || v < nt::zero() || v > nt::one())
        throw Error(Errc::ProbabilityOutOfRange, "p[" + std::to_string(i + 1) + "] not in [0,1]",
                    static_cast<long>(i + 1));
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const T& v = w_[i];
      if (!nt::finite(v) || !(v > nt::zero()))
        throw Error(Errc::NonPositivePayoff, "w[" + std::to_string(i + 1) + "] must be > 0",
                    static_cast<long>(i + 1));
    }
  }

  int n() const { return static_cast<int>(p_.size()); }

  /// 1-based accessors, bounds-checked.
  const T& p(int k) const {
    check_index(k);
    return p_[static_cast<std::size_t>(k - 1)];
  }
  const T& w(int k) const {
    check_index(k);
    return w_[static_cast<std::size_t>(k - 1)];
  }

  const std::vector<T>& probabilities() const { return p_; }
  const std::vector<T>& payoffs() const { return w_; }

  void check_index(int k) const {
    if (k < 1 || k > n())
      throw Error(Errc::IndexOutOfRange, "index " + std::to_string(k) + " not in 1.." + std::to_string(n()), k);
  }

 private:
  std::vector<T> p_;
  std::vector<T> w_;
};

/// Named entry point matching the validation contract; the constructor does
/// the actual checking.
template <class T>
ProblemInstance<T> validate(std::vector<T> raw_p, std::vector<T> raw_w) {
  return ProblemInstance<T>(std::move(raw_p), std::move(raw_w));
}

/// O(1) queries of survival products prod_{i=a}^{b} (1-p_i) after O(n)
/// setup. Certain successes (p_i = 1) are kept out of the aggregate and
/// counted separately, so float mode never forms -inf - (-inf) and exact
/// mode never divides by zero: in float mode the aggregate is the suffix
/// sum of log(1-p_i) over the nonzero factors, in exact mode the suffix
/// product of the nonzero factors.
template <class T>
class SurvivalTable {
  using nt = numeric_traits<T>;

 public:
  explicit SurvivalTable(const ProblemInstance<T>& inst) : n_(inst.n()) {
    const auto& p = inst.probabilities();
    zeros_from_.assign(static_cast<std::size_t>(n_) + 2, 0);
    if constexpr (nt::is_exact) {
      agg_from_.assign(static_cast<std::size_t>(n_) + 2, nt::one());
    } else {
      agg_from_.assign(static_cast<std::size_t>(n_) + 2, 0.0);
    }
    for (int k = n_; k >= 1; --k) {
      const T& pk = p[static_cast<std::size_t>(k - 1)];
      bool certain = (pk == nt::one());
      zeros_from_[k] = zeros_from_[k + 1] + (certain ? 1 : 0);
      if constexpr (nt::is_exact) {
        agg_from_[k] = certain ? agg_from_[k + 1] : T(agg_from_[k + 1] * (nt::one() - pk));
      } else {
        agg_from_[k] = certain ? agg_from_[k + 1] : agg_from_[k + 1] + std::log1p(-pk);
      }
    }
  }

  int n() const { return n_; }

  /// prod_{i=a}^{b} (1-p_i); empty range (a > b) is 1.
  T product(int a, int b) const {
    check_range(a, b);
    if (a > b) return nt::one();
    if (zeros_from_[a] - zeros_from_[b + 1] > 0) return nt::zero();
    if constexpr (nt::is_exact) {
      return agg_from_[a] / agg_from_[b + 1];
    } else {
      return std::exp(agg_from_[a] - agg_from_[b + 1]);
    }
  }

  /// True iff some p_i = 1 with a <= i <= b.
  bool has_certain(int a, int b) const {
    check_range(a, b);
    if (a > b) return false;
    return zeros_from_[a] - zeros_from_[b + 1] > 0;
  }

  /// Smallest i in [a, b] with p_i = 1; 0 if none.
  int first_certain(int a, int b) const {
    check_range(a, b);
    for (int i = a; i <= b; ++i)
      if (zeros_from_[i] - zeros_from_[i + 1] > 0) return i;
    return 0;
  }

 private:
  void check_range(int a, int b) const {
    // Allow the empty range a = b+1 at either edge (a up to n+1, b down to 0).
    if (a < 1 || a > n_ + 1 || b < 0 || b > n_)
      throw Error(Errc::IndexOutOfRange,
                  "range [" + std::to_string(a) + "," + std::to_string(b) + "] outside 1.." + std::to_string(n_));
  }

  int n_;
  std::vector<int> zeros_from_;
  std::vector<T> agg_from_;  // suffix log-sums (float) or suffix products (exact) over factors != 0
};

/// One-shot survival product; builds the table internally. Callers doing
/// many queries should hold a SurvivalTable.
template <class T>
T survival_product(const ProblemInstance<T>& inst, int a, int b) {
  return SurvivalTable<T>(inst).product(a, b);
}

}  // namespace lsp
