#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wiretap/payoff.hpp"

using namespace wiretap;

namespace {

constexpr double kH03 = 0.8812908992306926;
constexpr double kFAt15Uniform4 = 0.6424592742792879;  // f(1.5) on segment n=2

// Direct evaluation of the interpolated Hamming curve at its knots.
double knot(int n) { return (n - 1.0) / n; }

}  // namespace

TEST_CASE("value matrix invariants") {
  CHECK_THROWS_AS(ValueMatrix(2, 2, {0.0, -1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(ValueMatrix(2, 2, {0.0, 1.0, 1.0}), std::invalid_argument);
  ValueMatrix h = ValueMatrix::hamming(3);
  CHECK(h(0, 0) == 0.0);
  CHECK(h(0, 2) == 1.0);
  CHECK(h.max_value() == 1.0);
}

TEST_CASE("unconditional payoff") {
  ValueMatrix hamming = ValueMatrix::hamming(2);
  CHECK(unconditional_payoff(FiniteDistribution::uniform(2), hamming) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(unconditional_payoff(FiniteDistribution::point_mass(2, 1), hamming) == 0.0);
  CHECK(unconditional_payoff(FiniteDistribution::bernoulli(0.3), hamming) ==
        doctest::Approx(0.3).epsilon(1e-15));
  CHECK_THROWS_AS(unconditional_payoff(FiniteDistribution::uniform(3), hamming),
                  std::invalid_argument);
}

TEST_CASE("payoff given side information") {
  ValueMatrix hamming = ValueMatrix::hamming(2);
  FiniteDistribution uniform = FiniteDistribution::uniform(2);

  CHECK(payoff_given_aux(SourceAux(uniform, Channel::identity(2)), hamming) == 0.0);

  // U carries nothing: collapse to a single symbol.
  Channel useless(2, 1, {1.0, 1.0});
  CHECK(payoff_given_aux(SourceAux(uniform, useless), hamming) ==
        doctest::Approx(0.5).epsilon(1e-15));

  CHECK(payoff_given_aux(SourceAux(uniform, Channel::bsc(0.2)), hamming) ==
        doctest::Approx(0.2).epsilon(1e-14));

  CHECK_THROWS_AS(SourceAux(FiniteDistribution::uniform(3), Channel::bsc(0.1)),
                  std::invalid_argument);
}

TEST_CASE("side information never helps Eve beyond the prior") {
  testutil::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int ns = 2 + rng.index(3);
    int nu = 1 + rng.index(5);
    int nt = 2 + rng.index(3);
    FiniteDistribution source(rng.simplex(ns));
    std::vector<double> values(static_cast<std::size_t>(ns) * nt);
    for (double& v : values) v = 2.0 * rng.real();
    ValueMatrix pi(ns, nt, values);
    SourceAux aux(source, Channel(ns, nu, rng.stochastic(ns, nu)));
    CHECK(payoff_given_aux(aux, pi) <= unconditional_payoff(source, pi) + 1e-12);
  }
}

TEST_CASE("hamming payoff curve") {
  FiniteDistribution uniform = FiniteDistribution::uniform(2);
  CHECK(hamming_payoff_fn(uniform, 0.0) == 0.0);
  CHECK(hamming_payoff_fn(uniform, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(hamming_payoff_fn(uniform, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(hamming_payoff_fn(FiniteDistribution::bernoulli(0.1), 1.0) ==
        doctest::Approx(0.1).epsilon(1e-15));
  CHECK_THROWS_AS(hamming_payoff_fn(uniform, -0.1), std::invalid_argument);

  // Knots and a mid-segment value on larger alphabets.
  FiniteDistribution uniform4 = FiniteDistribution::uniform(4);
  CHECK(hamming_payoff_fn(uniform4, std::log2(3.0)) ==
        doctest::Approx(knot(3)).epsilon(1e-12));
  CHECK(hamming_payoff_fn(uniform4, 2.0) == doctest::Approx(knot(4)).epsilon(1e-12));
  CHECK(hamming_payoff_fn(uniform4, 1.5) ==
        doctest::Approx(kFAt15Uniform4).epsilon(1e-12));
  // The cap binds once f crosses 1 - max P(s).
  CHECK(hamming_payoff_fn(FiniteDistribution::bernoulli(0.3), 2.0) ==
        doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("hamming payoff curve is concave and nondecreasing") {
  testutil::Rng rng(5);
  std::vector<FiniteDistribution> sources = {
      FiniteDistribution::uniform(2), FiniteDistribution::bernoulli(0.2),
      FiniteDistribution::uniform(5), FiniteDistribution({0.5, 0.25, 0.25})};
  for (const auto& source : sources) {
    for (int trial = 0; trial < 100; ++trial) {
      double a = 3.0 * rng.real();
      double b = 3.0 * rng.real();
      double mid = hamming_payoff_fn(source, 0.5 * (a + b));
      double avg = 0.5 * (hamming_payoff_fn(source, a) + hamming_payoff_fn(source, b));
      CHECK(mid >= avg - 1e-12);
      double lo = std::min(a, b), hi = std::max(a, b);
      CHECK(hamming_payoff_fn(source, hi) >= hamming_payoff_fn(source, lo) - 1e-12);
    }
  }
}

TEST_CASE("secrecy payoff optimization") {
  ValueMatrix hamming = ValueMatrix::hamming(2);
  SecrecySearch budget;
  budget.restarts = 24;
  budget.iterations = 200;

  SUBCASE("zero budget forces a revealing channel") {
    CHECK(secrecy_payoff_fn(FiniteDistribution::bernoulli(0.3), hamming, 0.0, 0,
                            budget) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("full budget reaches the unconditional payoff") {
    FiniteDistribution source = FiniteDistribution::bernoulli(0.3);
    double full = secrecy_payoff_fn(source, hamming, entropy(source), 0, budget);
    CHECK(full == doctest::Approx(0.3).epsilon(1e-6));
  }
  SUBCASE("matches the closed form on a coarse grid") {
    FiniteDistribution source = FiniteDistribution::bernoulli(0.3);
    double h = entropy(source);
    double prev = -1.0;
    for (int k = 0; k <= 6; ++k) {
      double rate = h * k / 6.0;
      double numeric = secrecy_payoff_fn(source, hamming, rate, 0, budget);
      CHECK(numeric == doctest::Approx(hamming_payoff_fn(source, rate)).epsilon(2e-3));
      CHECK(numeric >= prev - 1e-9);  // nondecreasing along the grid
      prev = numeric;
    }
  }
  SUBCASE("rate beyond the source entropy is infeasible") {
    CHECK_THROWS_AS(secrecy_payoff_fn(FiniteDistribution::bernoulli(0.3), hamming,
                                      kH03 + 0.1, 0, budget),
                    std::domain_error);
  }
  SUBCASE("deterministic under a fixed budget") {
    FiniteDistribution source = FiniteDistribution::bernoulli(0.4);
    double a = secrecy_payoff_fn(source, hamming, 0.5, 0, budget);
    double b = secrecy_payoff_fn(source, hamming, 0.5, 0, budget);
    CHECK(a == b);
  }
}
