#pragma once

#include <string>
#include <vector>

#include "lsp/extended_real.hpp"
#include "lsp/instance.hpp"

namespace lsp {

/// Output of the extended odds machinery: the index
///
///   s = max{ k : sum_{j=k}^{n} w_j p_j/(1-p_j) >= w_{k-1} }   (w_0 := 0)
///
/// and the expected profit of the threshold rule at s,
///   value = prod_{j=s}^{n}(1-p_j) * sum_{i=s}^{n} w_i p_i/(1-p_i)  if p_s < 1,
///   value = w_s * prod_{j=s+1}^{n}(1-p_j)                          if p_s = 1.
template <class T>
struct OddsResult {
  int s = 1;
  bool degenerate = false;  // p_s = 1
  T value{};
};

/// One backward pass; terms with p_j = 1 contribute +infinity, which
/// satisfies any finite threshold, so k = s is the first hit scanning down
/// from n. k = 1 always qualifies (w_0 = 0 and the sum is nonnegative).
template <class T>
int odds_index(const ProblemInstance<T>& inst) {
  using nt = numeric_traits<T>;
  const int n = inst.n();
  CompensatedSum<T> finite_part;
  int infinite_terms = 0;
  for (int k = n; k >= 1; --k) {
    const T& pk = inst.p(k);
    if (pk == nt::one())
      ++infinite_terms;
    else
      finite_part.add(inst.w(k) * pk / (nt::one() - pk));
    if (infinite_terms > 0) return k;
    const T threshold = (k == 1) ? nt::zero() : inst.w(k - 1);
    if (finite_part.total() >= threshold) return k;
  }
  return 1;
}

/// Threshold-rule value at an arbitrary s in 1..n. For s = odds_index only
/// the theorem's two branches occur; for smaller s a certain success may sit
/// strictly after s, in which case the rule surely stops at or before the
/// first such index m and the value collapses to
/// prod_{j=s}^{m-1}(1-p_j) * w_m * prod_{t=m+1}^{n}(1-p_t). All three routes
/// equal ebar_keep(s-1).
template <class T>
T odds_value(const ProblemInstance<T>& inst, int s) {
  using nt = numeric_traits<T>;
  inst.check_index(s);
  const int n = inst.n();
  SurvivalTable<T> surv(inst);
  if (inst.p(s) == nt::one()) return inst.w(s) * surv.product(s + 1, n);
  if (surv.has_certain(s, n)) {
    const int m = surv.first_certain(s, n);
    return surv.product(s, m - 1) * inst.w(m) * surv.product(m + 1, n);
  }
  CompensatedSum<T> odds_sum;
  for (int i = n; i >= s; --i) odds_sum.add(inst.w(i) * inst.p(i) / (nt::one() - inst.p(i)));
  return surv.product(s, n) * odds_sum.total();
}

template <class T>
OddsResult<T> extended_odds(const ProblemInstance<T>& inst) {
  OddsResult<T> r;
  r.s = odds_index(inst);
  r.degenerate = (inst.p(r.s) == numeric_traits<T>::one());
  r.value = odds_value(inst, r.s);
  return r;
}

/// Classic odds theorem (w == 1, all p_k < 1), implemented directly from its
/// own statement rather than by delegating to the extended machinery, so the
/// reduction test between the two stays meaningful:
///   s = max{1 <= k <= n : sum_{j=k}^{n} r_j >= 1}, falling back to 1,
///   value = (prod_{j=s}^{n} q_j)(sum_{i=s}^{n} r_i).
template <class T>
OddsResult<T> classic_odds(const std::vector<T>& p) {
  using nt = numeric_traits<T>;
  ProblemInstance<T> inst(p, std::vector<T>(p.size(), nt::one()));  // validates p
  const int n = inst.n();
  for (int k = 1; k <= n; ++k)
    if (inst.p(k) == nt::one())
      throw Error(Errc::DegenerateProbability, "classic odds theorem requires p[" + std::to_string(k) + "] < 1", k);

  int s = 1;
  {
    CompensatedSum<T> r_sum;
    for (int k = n; k >= 1; --k) {
      r_sum.add(inst.p(k) / (nt::one() - inst.p(k)));
      if (r_sum.total() >= nt::one()) {
        s = k;
        break;
      }
    }
  }
  CompensatedSum<T> r_sum;
  T q_prod = nt::one();
  for (int j = n; j >= s; --j) {
    q_prod *= nt::one() - inst.p(j);
    r_sum.add(inst.p(j) / (nt::one() - inst.p(j)));
  }
  OddsResult<T> out;
  out.s = s;
  out.degenerate = false;
  out.value = q_prod * r_sum.total();
  return out;
}

}  // namespace lsp
