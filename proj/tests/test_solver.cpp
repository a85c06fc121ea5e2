#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lsp/monotonicity.hpp"
#include "lsp/oracle.hpp"
#include "lsp/solver.hpp"
#include "support/corpus.hpp"

using lsp::Rational;

TEST_CASE("e_stop closed form", "[solver]") {
  auto inst = corpus::example9<Rational>();
  CHECK(lsp::e_stop(inst, 9) == Rational(1));  // k = n: empty product
  // Stop at 8 pays w_8 = 9 iff trial 9 fails: 9 * 11/12. The two-outcome
  // expectation over I_9 gives the same value.
  CHECK(lsp::e_stop(inst, 8) == Rational(33, 4));
  Rational by_outcomes = Rational(1, 12) * Rational(0) + Rational(11, 12) * Rational(9);
  CHECK(lsp::e_stop(inst, 8) == by_outcomes);
  CHECK_THROWS_AS(lsp::e_stop(inst, 0), lsp::Error);
  CHECK_THROWS_AS(lsp::e_stop(inst, 10), lsp::Error);
}

TEST_CASE("e_stop vanishes when a later success is certain", "[solver]") {
  lsp::ProblemInstance<Rational> inst({Rational(1, 2), Rational(1, 2), Rational(1)},
                                      {Rational(5), Rational(5), Rational(5)});
  CHECK(lsp::e_stop(inst, 1) == Rational(0));
  CHECK(lsp::e_stop(inst, 2) == Rational(0));
  CHECK(lsp::e_stop(inst, 3) == Rational(5));
}

TEST_CASE("solve reproduces the reference instance exactly", "[solver]") {
  auto sol = lsp::solve(corpus::example9<Rational>());
  CHECK(sol.expected_profit == corpus::example9_profit());
  CHECK(sol.stopping_set == corpus::example9_stopping_set());
  CHECK(sol.e_keep[9] == Rational(0));
  CHECK(sol.e_keep[0] == sol.expected_profit);
}

TEST_CASE("solve reproduces the reference instance in float mode", "[solver]") {
  auto sol = lsp::solve(corpus::example9<double>());
  CHECK(std::abs(sol.expected_profit - 3.3605) < 1e-12);
  CHECK(sol.stopping_set == corpus::example9_stopping_set());
}

TEST_CASE("solve single-trial instance", "[solver]") {
  lsp::ProblemInstance<double> inst({0.3}, {2.0});
  auto sol = lsp::solve(inst);
  CHECK(sol.expected_profit == Catch::Approx(0.6).margin(1e-15));
  CHECK(sol.stopping_set == std::vector<int>{1});
}

TEST_CASE("solve hand-unrolled two-trial instance", "[solver]") {
  lsp::ProblemInstance<Rational> inst({Rational(1, 2), Rational(1, 2)}, {Rational(4), Rational(1)});
  auto sol = lsp::solve(inst);
  CHECK(sol.expected_profit == Rational(5, 4));
  CHECK(sol.stopping_set == std::vector<int>{1, 2});
  // Cross-check against all four stopping-set strategies.
  Rational best(0);
  for (const auto& set : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}}) {
    Rational v = lsp::evaluate_stop_set(inst, set);
    if (v > best) best = v;
  }
  CHECK(best == Rational(5, 4));
}

TEST_CASE("advise is a pure stopping-set lookup", "[solver]") {
  auto sol = lsp::solve(corpus::example9<Rational>());
  CHECK(lsp::advise(sol, 4, true) == lsp::Decision::Stop);
  CHECK(lsp::advise(sol, 6, true) == lsp::Decision::Continue);
  CHECK(lsp::advise(sol, 4, false) == lsp::Decision::Continue);
  CHECK(lsp::advise(sol, 1, false) == lsp::Decision::Continue);
  CHECK_THROWS_AS(lsp::advise(sol, 0, true), lsp::Error);
  CHECK_THROWS_AS(lsp::advise(sol, 10, true), lsp::Error);
}

TEST_CASE("last index always stops", "[solver]") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 30; ++iter) {
    auto inst = corpus::random_rational_instance(rng);
    auto sol = lsp::solve(inst);
    REQUIRE(!sol.stopping_set.empty());
    CHECK(sol.stopping_set.back() == inst.n());
  }
}

TEST_CASE("payoff condition makes e_keep non-increasing", "[solver]") {
  std::mt19937_64 rng(202);
  int monotone_seen = 0;
  for (int iter = 0; iter < 200; ++iter) {
    auto inst = corpus::random_rational_instance(rng);
    if (!lsp::sufficient_condition(inst)) continue;
    ++monotone_seen;
    auto sol = lsp::solve(inst);
    for (int k = 0; k < inst.n(); ++k)
      CHECK(sol.e_keep[static_cast<std::size_t>(k)] >= sol.e_keep[static_cast<std::size_t>(k + 1)]);
  }
  CHECK(monotone_seen > 0);

  // Same claim in float mode under the tolerance.
  std::mt19937_64 frng(203);
  for (int iter = 0; iter < 100; ++iter) {
    auto inst = corpus::random_float_instance(frng);
    if (!lsp::sufficient_condition(inst)) continue;
    auto sol = lsp::solve(inst);
    for (int k = 0; k < inst.n(); ++k)
      CHECK(sol.e_keep[static_cast<std::size_t>(k)] >=
            sol.e_keep[static_cast<std::size_t>(k + 1)] - 1e-12);
  }
}

TEST_CASE("payoff scaling leaves the stopping set fixed and scales values", "[solver]") {
  std::mt19937_64 rng(303);
  const Rational c(7, 3);
  for (int iter = 0; iter < 40; ++iter) {
    auto inst = corpus::random_rational_instance(rng);
    auto scaled = corpus::scale_payoffs(inst, c);
    auto sol = lsp::solve(inst);
    auto sol2 = lsp::solve(scaled);
    CHECK(sol2.stopping_set == sol.stopping_set);
    CHECK(sol2.expected_profit == c * sol.expected_profit);
    for (int k = 1; k <= inst.n(); ++k)
      CHECK(sol2.e_stop[static_cast<std::size_t>(k)] == c * sol.e_stop[static_cast<std::size_t>(k)]);
    for (int k = 0; k <= inst.n(); ++k)
      CHECK(sol2.e_keep[static_cast<std::size_t>(k)] == c * sol.e_keep[static_cast<std::size_t>(k)]);
  }
}
