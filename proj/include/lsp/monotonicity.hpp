#pragma once

#include <string>
#include <vector>

#include "lsp/solver.hpp"

namespace lsp {

/// How a monotonicity verdict was certified, cheapest criterion first:
/// the payoff condition w_{k+1} >= (1-p_{k+1}) w_k (sufficient only), the
/// at-most-one-sign-change test on e_stop - ebar_keep (an iff), or the
/// ground-truth suffix shape of the DP stopping set.
enum class MonotoneCertificate {
  SufficientPayoffCondition,
  SignChangeAtMostOnce,
  DpSuffixCheck,
  NotMonotone,
};

inline const char* certificate_name(MonotoneCertificate c) {
  switch (c) {
    case MonotoneCertificate::SufficientPayoffCondition: return "sufficient-payoff-condition";
    case MonotoneCertificate::SignChangeAtMostOnce: return "sign-change-at-most-once";
    case MonotoneCertificate::DpSuffixCheck: return "dp-suffix-check";
    case MonotoneCertificate::NotMonotone: return "not-monotone";
  }
  return "unknown";
}

struct MonotonicityVerdict {
  bool monotone = false;
  MonotoneCertificate certificate = MonotoneCertificate::NotMonotone;
  int threshold = 0;       // min of the stopping set when monotone
  int witness_gap = 0;     // first gap above min(stopping_set) when not monotone
  int witness_member = 0;  // next stopping-set member after the gap
};

/// Values of the myopic rule "stop on the first success after event k" for
/// every k in 0..n, via the backward recurrence
///   ebar(n) = 0,  ebar(k) = p_{k+1} e_stop(k+1) + (1-p_{k+1}) ebar(k+1),
/// which telescopes to sum_{i=k+1}^{n} (prod_{j=k+1}^{i-1}(1-p_j)) p_i e_stop(i).
template <class T>
std::vector<T> ebar_keep_all(const ProblemInstance<T>& inst) {
  using nt = numeric_traits<T>;
  const int n = inst.n();
  const auto& p = inst.probabilities();
  SurvivalTable<T> surv(inst);
  std::vector<T> ebar(static_cast<std::size_t>(n) + 1, nt::zero());
  for (int k = n - 1; k >= 0; --k) {
    const T& pk1 = p[static_cast<std::size_t>(k)];
    T stop_next = inst.w(k + 1) * surv.product(k + 2, n);
    ebar[static_cast<std::size_t>(k)] =
        pk1 * stop_next + (nt::one() - pk1) * ebar[static_cast<std::size_t>(k + 1)];
  }
  return ebar;
}

template <class T>
T ebar_keep(const ProblemInstance<T>& inst, int k) {
  if (k < 0 || k > inst.n())
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(k) + " not in 0.." + std::to_string(inst.n()), k);
  return ebar_keep_all(inst)[static_cast<std::size_t>(k)];
}

/// w_{k+1} >= (1-p_{k+1}) w_k for all k in 1..n-1; vacuously true for n = 1.
/// Sufficient for monotonicity (it makes e_stop non-decreasing), never
/// necessary.
template <class T>
bool sufficient_condition(const ProblemInstance<T>& inst) {
  using nt = numeric_traits<T>;
  for (int k = 1; k <= inst.n() - 1; ++k) {
    if (inst.w(k + 1) < (nt::one() - inst.p(k + 1)) * inst.w(k)) return false;
  }
  return true;
}

/// Number of adjacent sign flips of d(k) = e_stop(k) - ebar_keep(k) over
/// k = 1..n, where zero (and, in float mode, |d| < eps) counts as the
/// "continue" sign. d(n) = w_n > 0, so the final sign is +.
template <class T>
int sign_changes(const ProblemInstance<T>& inst) {
  using nt = numeric_traits<T>;
  const int n = inst.n();
  std::vector<T> ebar = ebar_keep_all(inst);
  SurvivalTable<T> surv(inst);
  int flips = 0;
  bool have_prev = false;
  bool prev_positive = false;
  for (int k = 1; k <= n; ++k) {
    T d = inst.w(k) * surv.product(k + 1, n) - ebar[static_cast<std::size_t>(k)];
    bool positive = nt::decision_sign(d) > 0;
    if (have_prev && positive != prev_positive) ++flips;
    prev_positive = positive;
    have_prev = true;
  }
  return flips;
}

/// Ground truth: the problem is monotone iff the stopping set is the
/// contiguous suffix {k : k >= min(stopping_set)}. The certificate records
/// the cheapest criterion that explains the verdict; when not monotone the
/// witness is the first gap and the next member after it.
template <class T>
MonotonicityVerdict certify(const ProblemInstance<T>& inst, const DpSolution<T>& sol) {
  MonotonicityVerdict v;
  const auto& set = sol.stopping_set;
  if (set.empty()) {
    // Unreachable in exact mode (n is always a member); float-mode epsilon
    // pathology with w_n below the decision tolerance could get here.
    v.monotone = false;
    v.certificate = MonotoneCertificate::NotMonotone;
    v.witness_gap = inst.n();
    v.witness_member = inst.n();
    return v;
  }

  const int lo = set.front();
  bool suffix = static_cast<int>(set.size()) == inst.n() - lo + 1;
  if (suffix) {
    v.monotone = true;
    v.threshold = lo;
    if (sufficient_condition(inst))
      v.certificate = MonotoneCertificate::SufficientPayoffCondition;
    else if (sign_changes(inst) <= 1)
      v.certificate = MonotoneCertificate::SignChangeAtMostOnce;
    else
      v.certificate = MonotoneCertificate::DpSuffixCheck;
    return v;
  }

  v.monotone = false;
  v.certificate = MonotoneCertificate::NotMonotone;
  int expected = lo;
  for (int member : set) {
    if (member != expected) {
      v.witness_gap = expected;
      v.witness_member = member;
      break;
    }
    ++expected;
  }
  return v;
}

}  // namespace lsp
