#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lsp/extended_real.hpp"
#include "lsp/instance.hpp"
#include "lsp/rational.hpp"
#include "support/corpus.hpp"

using lsp::Errc;
using lsp::Error;
using lsp::Rational;

TEST_CASE("validate accepts the reference instance", "[core]") {
  auto inst = corpus::example9<Rational>();
  CHECK(inst.n() == 9);
  CHECK(inst.p(9) == Rational(1, 12));
  CHECK(inst.w(1) == Rational(7));
}

TEST_CASE("validate accepts a minimal instance", "[core]") {
  lsp::ProblemInstance<double> inst({0.5}, {1.0});
  CHECK(inst.n() == 1);
}

TEST_CASE("validate rejects structured error cases", "[core]") {
  auto expect_error = [](auto fn, Errc code, long index) {
    try {
      fn();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
      CHECK(e.index() == index);
    }
  };
  expect_error([] { lsp::validate<double>({0.5, 1.2}, {1.0, 1.0}); }, Errc::ProbabilityOutOfRange, 2);
  expect_error([] { lsp::validate<double>({0.5}, {1.0, 1.0}); }, Errc::LengthMismatch, 0);
  expect_error([] { lsp::validate<double>({}, {}); }, Errc::EmptyInstance, 0);
  expect_error([] { lsp::validate<double>({0.5, 0.5}, {1.0, 0.0}); }, Errc::NonPositivePayoff, 2);
  expect_error([] { lsp::validate<double>({0.5}, {-2.0}); }, Errc::NonPositivePayoff, 1);
  expect_error([] { lsp::validate<Rational>({Rational(-1, 10)}, {Rational(1)}); }, Errc::ProbabilityOutOfRange, 1);
  // Non-finite floats are never clamped.
  expect_error([] { lsp::validate<double>({std::nan("")}, {1.0}); }, Errc::ProbabilityOutOfRange, 1);
  expect_error([] { lsp::validate<double>({0.5}, {std::numeric_limits<double>::infinity()}); },
               Errc::NonPositivePayoff, 1);
}

TEST_CASE("survival product basics", "[core]") {
  auto inst = corpus::example9<Rational>();
  lsp::SurvivalTable<Rational> surv(inst);
  CHECK(surv.product(5, 4) == Rational(1));     // empty range
  CHECK(surv.product(10, 9) == Rational(1));    // empty range at the top edge
  CHECK(surv.product(9, 9) == Rational(11, 12));
  CHECK(lsp::survival_product(inst, 9, 9) == Rational(11, 12));
  CHECK_THROWS_AS(surv.product(0, 3), Error);
  CHECK_THROWS_AS(surv.product(1, 10), Error);
}

TEST_CASE("survival product with certain successes", "[core]") {
  lsp::ProblemInstance<Rational> inst({Rational(1, 2), Rational(1), Rational(1, 3)},
                                      {Rational(1), Rational(1), Rational(1)});
  lsp::SurvivalTable<Rational> surv(inst);
  CHECK(surv.product(1, 3) == Rational(0));
  CHECK(surv.product(2, 2) == Rational(0));
  CHECK(surv.product(3, 3) == Rational(2, 3));
  CHECK(surv.has_certain(1, 3));
  CHECK(!surv.has_certain(3, 3));
  CHECK(surv.first_certain(1, 3) == 2);

  lsp::ProblemInstance<double> finst({0.5, 1.0, 1.0 / 3.0}, {1.0, 1.0, 1.0});
  lsp::SurvivalTable<double> fsurv(finst);
  CHECK(fsurv.product(1, 3) == 0.0);
  CHECK(fsurv.product(3, 3) == Catch::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("survival product splits multiplicatively", "[core]") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 40; ++iter) {
    corpus::RandomOptions opt;
    opt.min_n = 3;
    opt.max_n = 12;
    opt.allow_p_one = (iter % 4 == 0);
    auto inst = corpus::random_rational_instance(rng, opt);
    lsp::SurvivalTable<Rational> surv(inst);
    std::uniform_int_distribution<int> d(1, inst.n());
    int a = d(rng), b = d(rng), c = d(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    CHECK(surv.product(a, b) * surv.product(b + 1, c) == surv.product(a, c));
  }
}

TEST_CASE("float survival products stay within 1e-12 relative on long ranges", "[core]") {
  std::mt19937_64 rng(7);
  const int n = 10000;
  std::vector<double> p(n), w(n, 1.0);
  std::uniform_real_distribution<double> d(0.0, 0.5);
  for (auto& v : p) v = d(rng);
  lsp::ProblemInstance<double> inst(std::move(p), std::move(w));
  lsp::SurvivalTable<double> surv(inst);
  // Direct product as reference on a few windows.
  std::uniform_int_distribution<int> pick(1, n);
  for (int iter = 0; iter < 10; ++iter) {
    int a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    double direct = 1.0;
    for (int i = a; i <= b; ++i) direct *= 1.0 - inst.p(i);
    double table = surv.product(a, b);
    if (direct > 0) CHECK(std::abs(table - direct) / direct < 1e-12);
  }
}

TEST_CASE("extended reals absorb infinity", "[core]") {
  using E = lsp::ExtendedReal<double>;
  E fin(3.5);
  E inf = E::infinity();
  CHECK((fin + inf).infinite);
  CHECK((inf + fin).infinite);
  CHECK(inf.at_least(1e300));
  CHECK(fin.at_least(3.5));
  CHECK(!fin.at_least(3.6));
  CHECK(lsp::odds_ratio(1.0).infinite);
  CHECK(lsp::odds_ratio(0.5).value == 1.0);
  CHECK(lsp::odds_ratio(Rational(1)).infinite);
  CHECK(lsp::odds_ratio(Rational(1, 3)).value == Rational(1, 2));
}

TEST_CASE("scalar parsing distinguishes exact and float forms", "[core]") {
  auto f = lsp::parse_scalar("1/6");
  CHECK(f.exact);
  CHECK(f.value == Rational(1, 6));
  auto i = lsp::parse_scalar("7");
  CHECK(i.exact);
  CHECK(i.value == Rational(7));
  auto neg = lsp::parse_scalar("-3/9");
  CHECK(neg.exact);
  CHECK(neg.value == Rational(-1, 3));
  auto d = lsp::parse_scalar("0.25");
  CHECK(!d.exact);
  CHECK(d.approx == 0.25);
  auto sci = lsp::parse_scalar("1e-3");
  CHECK(!sci.exact);
  CHECK(sci.approx == 1e-3);
  CHECK_THROWS_AS(lsp::parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(lsp::parse_scalar("abc"), Error);
  CHECK_THROWS_AS(lsp::parse_scalar(""), Error);
  CHECK_THROWS_AS(lsp::parse_scalar("1/2/3"), Error);
}

TEST_CASE("rational helpers", "[core]") {
  CHECK(lsp::format_rational(Rational(6721, 2000)) == "6721/2000");
  CHECK(lsp::format_rational(Rational(7)) == "7");
  CHECK(lsp::rational_floor(Rational(7, 2)) == 3);
  CHECK(lsp::rational_floor(Rational(-7, 2)) == -4);
  CHECK(lsp::rational_floor(Rational(4)) == 4);
  CHECK(lsp::rational_ceil(Rational(7, 2)) == 4);
  CHECK(lsp::rational_ceil(Rational(10, 3)) == 4);
  CHECK(lsp::rational_ceil(Rational(4)) == 4);
  CHECK(lsp::rational_pow(Rational(1, 2), 3) == Rational(1, 8));
  CHECK(lsp::rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(lsp::rational_pow(Rational(5), 0) == Rational(1));
}
