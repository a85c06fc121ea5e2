#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "lsp/instance.hpp"

namespace lsp {

/// Backward-induction solution of one instance.
///
/// e_stop(k) = w_k * prod_{i=k+1}^{n} (1-p_i) is the expected profit of
/// stopping at k on a success; e_keep(k) is the value of continuing
/// optimally after trial k, with e_keep(n) = 0 and
///
///   e_keep(k) = p_{k+1} * max(e_stop(k+1), e_keep(k+1))
///             + (1-p_{k+1}) * e_keep(k+1).
///
/// The stopping set holds every k where e_stop(k) > e_keep(k) strictly;
/// ties continue. expected_profit = e_keep(0).
template <class T>
struct DpSolution {
  std::vector<T> e_stop;          // index 1..n ([0] unused)
  std::vector<T> e_keep;          // index 0..n
  std::vector<int> stopping_set;  // ascending
  T expected_profit{};

  bool in_stopping_set(int k) const {
    return std::binary_search(stopping_set.begin(), stopping_set.end(), k);
  }
};

/// w_k * prod_{i=k+1}^{n} (1-p_i).
template <class T>
T e_stop(const ProblemInstance<T>& inst, int k) {
  inst.check_index(k);
  return inst.w(k) * survival_product(inst, k + 1, inst.n());
}

template <class T>
DpSolution<T> solve(const ProblemInstance<T>& inst) {
  using nt = numeric_traits<T>;
  const int n = inst.n();
  const auto& p = inst.probabilities();
  const auto& w = inst.payoffs();
  SurvivalTable<T> surv(inst);

  DpSolution<T> sol;
  sol.e_stop.assign(static_cast<std::size_t>(n) + 1, nt::zero());
  sol.e_keep.assign(static_cast<std::size_t>(n) + 1, nt::zero());
  for (int k = 1; k <= n; ++k)
    sol.e_stop[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k - 1)] * surv.product(k + 1, n);

  for (int k = n - 1; k >= 0; --k) {
    const T& pk1 = p[static_cast<std::size_t>(k)];  // p_{k+1}
    const T& stop_next = sol.e_stop[static_cast<std::size_t>(k + 1)];
    const T& keep_next = sol.e_keep[static_cast<std::size_t>(k + 1)];
    const T& best = std::max(stop_next, keep_next);
    sol.e_keep[static_cast<std::size_t>(k)] = pk1 * best + (nt::one() - pk1) * keep_next;
  }
  sol.expected_profit = sol.e_keep[0];

  for (int k = 1; k <= n; ++k) {
    if (nt::decision_sign(sol.e_stop[static_cast<std::size_t>(k)] - sol.e_keep[static_cast<std::size_t>(k)]) > 0)
      sol.stopping_set.push_back(k);
  }
  return sol;
}

enum class Decision { Stop, Continue };

/// Proposition-1 rule as a pure lookup: stop iff the trial succeeded and its
/// index is in the stopping set.
template <class T>
Decision advise(const DpSolution<T>& sol, int k, bool observed_success) {
  const int n = static_cast<int>(sol.e_keep.size()) - 1;
  if (k < 1 || k > n)
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(k) + " not in 1.." + std::to_string(n), k);
  return (observed_success && sol.in_stopping_set(k)) ? Decision::Stop : Decision::Continue;
}

}  // namespace lsp
