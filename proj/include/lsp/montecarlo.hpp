#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "lsp/instance.hpp"
#include "lsp/oracle.hpp"

namespace lsp {

namespace detail {

/// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

/// Stateless counter-based draw: the value depends only on (seed, trial, k),
/// never on how many draws came before, so trials can be evaluated lazily,
/// out of order, or on any number of workers with identical results.
inline double counter_uniform01(std::uint64_t seed, std::uint64_t trial, std::uint32_t k) {
  std::uint64_t h = detail::mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = detail::mix64(h ^ trial);
  h = detail::mix64(h ^ k);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct SimulationResult {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Trials are grouped into fixed chunks of this size; each chunk is summed
/// sequentially in trial order and chunk sums are combined in chunk-index
/// order, which is what makes the result bit-identical for every worker
/// count.
inline constexpr std::uint64_t kSimulationChunk = 1u << 16;

/// Samples the process: each trial draws I_k ~ Bernoulli(p_k) independently,
/// stops at the first k in `set` with I_k = 1, and scores w_k if no success
/// occurs after k (0 if it never stops).
template <class T>
SimulationResult simulate(const ProblemInstance<T>& inst, const std::vector<int>& set, std::uint64_t trials,
                          std::uint64_t seed, int workers = 1) {
  using nt = numeric_traits<T>;
  if (trials < 1) throw Error(Errc::ParseError, "trials must be >= 1");
  std::vector<int> members = detail::normalize_set(inst, set);
  const int n = inst.n();
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    p[static_cast<std::size_t>(k)] = nt::to_double(inst.p(k));
    w[static_cast<std::size_t>(k)] = nt::to_double(inst.w(k));
  }

  auto run_trial = [&](std::uint64_t t) -> double {
    int stopped_at = 0;
    for (int k : members) {
      if (counter_uniform01(seed, t, static_cast<std::uint32_t>(k)) < p[static_cast<std::size_t>(k)]) {
        stopped_at = k;
        break;
      }
    }
    if (stopped_at == 0) return 0.0;
    for (int i = stopped_at + 1; i <= n; ++i) {
      if (counter_uniform01(seed, t, static_cast<std::uint32_t>(i)) < p[static_cast<std::size_t>(i)]) return 0.0;
    }
    return w[static_cast<std::size_t>(stopped_at)];
  };

  const std::uint64_t num_chunks = (trials + kSimulationChunk - 1) / kSimulationChunk;
  std::vector<double> chunk_sum(num_chunks, 0.0);
  std::vector<double> chunk_sumsq(num_chunks, 0.0);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t lo = c * kSimulationChunk;
    const std::uint64_t hi = std::min(trials, lo + kSimulationChunk);
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t t = lo; t < hi; ++t) {
      double x = run_trial(t);
      sum += x;
      sumsq += x * x;
    }
    chunk_sum[c] = sum;
    chunk_sumsq[c] = sumsq;
  };

  if (workers <= 1 || num_chunks == 1) {
    for (std::uint64_t c = 0; c < num_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (std::uint64_t c = next.fetch_add(1); c < num_chunks; c = next.fetch_add(1)) run_chunk(c);
    };
    std::vector<std::thread> pool;
    const std::uint64_t count = std::min(static_cast<std::uint64_t>(workers), num_chunks);
    pool.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Combine in chunk order regardless of which worker ran what.
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t c = 0; c < num_chunks; ++c) {
    sum += chunk_sum[c];
    sumsq += chunk_sumsq[c];
  }

  SimulationResult r;
  r.trials = trials;
  r.seed = seed;
  r.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double variance = (sumsq - static_cast<double>(trials) * r.mean * r.mean) / static_cast<double>(trials - 1);
    if (variance < 0.0) variance = 0.0;  // rounding guard for constant samples
    r.std_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return r;
}

}  // namespace lsp
