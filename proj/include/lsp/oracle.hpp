#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lsp/instance.hpp"

namespace lsp {

inline constexpr int kBruteForceMaxN = 22;

template <class T>
struct StopSetEvaluation {
  std::vector<int> set;  // ascending
  T value{};
};

namespace detail {

/// Validates members and returns the set sorted ascending, deduplicated.
template <class T>
std::vector<int> normalize_set(const ProblemInstance<T>& inst, std::vector<int> set) {
  for (int k : set) inst.check_index(k);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace detail

/// Exact expectation of the rule "stop at the first k in `set` with
/// I_k = 1" in closed form:
///
///   sum_{k in set} ( prod_{j in set, j<k} (1-p_j) ) p_k w_k prod_{i>k} (1-p_i)
///
/// Only members of the set can absorb the process, so the prefix product
/// runs over set members; the tail product runs over all later indices.
template <class T>
T evaluate_stop_set(const ProblemInstance<T>& inst, const std::vector<int>& set) {
  using nt = numeric_traits<T>;
  std::vector<int> s = detail::normalize_set(inst, set);
  SurvivalTable<T> surv(inst);
  T acc = nt::zero();
  T prefix = nt::one();
  for (int k : s) {
    acc += prefix * inst.p(k) * inst.w(k) * surv.product(k + 1, inst.n());
    prefix *= nt::one() - inst.p(k);
  }
  return acc;
}

/// Exhaustive argmax over all 2^n stopping-set strategies. Ties break toward
/// the lexicographically smallest set (as an ascending index sequence), so
/// the result is deterministic no matter how the subsets are enumerated.
template <class T>
StopSetEvaluation<T> brute_force_optimal(const ProblemInstance<T>& inst) {
  using nt = numeric_traits<T>;
  const int n = inst.n();
  if (n > kBruteForceMaxN)
    throw Error(Errc::InstanceTooLarge,
                "brute force limited to n <= " + std::to_string(kBruteForceMaxN) + ", got n = " + std::to_string(n));

  SurvivalTable<T> surv(inst);
  std::vector<T> stop_term(static_cast<std::size_t>(n));  // p_k w_k prod_{i>k}(1-p_i)
  std::vector<T> q(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    stop_term[static_cast<std::size_t>(k - 1)] = inst.p(k) * inst.w(k) * surv.product(k + 1, n);
    q[static_cast<std::size_t>(k - 1)] = nt::one() - inst.p(k);
  }

  auto lex_less = [n](std::uint32_t a, std::uint32_t b) {
    for (int k = 0; k < n; ++k) {
      bool ina = (a >> k) & 1u, inb = (b >> k) & 1u;
      if (ina != inb) {
        // First index where membership differs: if the other set has no
        // members from here on it is a proper prefix, hence smaller.
        if (ina) return (b >> k) != 0u;
        return (a >> k) == 0u;
      }
    }
    return false;
  };

  std::uint32_t best_mask = 0;
  T best_value = nt::zero();  // empty set scores 0
  const std::uint32_t limit = static_cast<std::uint32_t>(1) << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    T acc = nt::zero();
    T prefix = nt::one();
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) {
        acc += prefix * stop_term[static_cast<std::size_t>(k)];
        prefix *= q[static_cast<std::size_t>(k)];
      }
    }
    if (acc > best_value || (acc == best_value && lex_less(mask, best_mask))) {
      best_value = std::move(acc);
      best_mask = mask;
    }
  }

  StopSetEvaluation<T> out;
  out.value = best_value;
  for (int k = 0; k < n; ++k)
    if ((best_mask >> k) & 1u) out.set.push_back(k + 1);
  return out;
}

/// Independent second oracle: raw enumeration of all 2^n outcome vectors,
/// summing probability x realized payoff of the stopping-set rule. Exists so
/// the closed form above is not self-certifying.
template <class T>
T enumerate_outcomes_value(const ProblemInstance<T>& inst, const std::vector<int>& set) {
  using nt = numeric_traits<T>;
  const int n = inst.n();
  if (n > 20)
    throw Error(Errc::InstanceTooLarge, "outcome enumeration limited to n <= 20, got n = " + std::to_string(n));
  std::vector<int> s = detail::normalize_set(inst, set);
  std::vector<bool> in_set(static_cast<std::size_t>(n) + 1, false);
  for (int k : s) in_set[static_cast<std::size_t>(k)] = true;

  T total = nt::zero();
  const std::uint32_t limit = static_cast<std::uint32_t>(1) << n;
  for (std::uint32_t outcome = 0; outcome < limit; ++outcome) {
    T prob = nt::one();
    int stopped_at = 0;
    int last_success = 0;
    for (int k = 1; k <= n; ++k) {
      bool success = (outcome >> (k - 1)) & 1u;
      prob *= success ? inst.p(k) : nt::one() - inst.p(k);
      if (success) {
        last_success = k;
        if (stopped_at == 0 && in_set[static_cast<std::size_t>(k)]) stopped_at = k;
      }
    }
    if (stopped_at != 0 && stopped_at == last_success) total += prob * inst.w(stopped_at);
  }
  return total;
}

}  // namespace lsp
