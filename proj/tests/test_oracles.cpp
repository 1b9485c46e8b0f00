#include <cmath>
#include <random>

#include "delta1d/bound_state.hpp"
#include "delta1d/errors.hpp"
#include "delta1d/oracles.hpp"
#include "doctest.h"

using namespace delta1d;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("residual report semantics") {
  CHECK(ResidualReport::make("x", 1e-13, 1e-12).passed);
  CHECK(ResidualReport::make("x", -1e-13, 1e-12).passed);
  CHECK_FALSE(ResidualReport::make("x", 2e-12, 1e-12).passed);
  CHECK(ResidualReport::make("x", 0.0, 0.0).passed);
}

TEST_CASE("bound residual from matrix") {
  // attractive delta: root exactly at kappa = mu
  CHECK(bound_residual_from_matrix(pure_delta_matrix(-1.7), 1.7) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // delta-delta': kappa = mu/(1+lambda^2)
  CHECK(std::abs(bound_residual_from_matrix(delta_delta_prime_matrix(1.0, 0.5), 0.8)) <
        1e-14);
  // free particle never binds
  CHECK(bound_residual_from_matrix(TransferMatrix::identity(), 0.9) ==
        doctest::Approx(1.8));
  CHECK_THROWS_AS(bound_residual_from_matrix(TransferMatrix::identity(), 0.0),
                  InvalidParams);
}

TEST_CASE("property: quadratic residual roots found by bisection") {
  std::mt19937_64 rng(31337);
  int verified = 0;
  for (int i = 0; i < 400; ++i) {
    const double t21 = uniform(rng, -2.0, 2.0);
    if (std::abs(t21) < 1e-3) continue;
    const double t11 = uniform(rng, -2.0, 2.0);
    if (std::abs(t11) < 1e-3) continue;
    const double t12 = uniform(rng, -3.0, 3.0);
    const double t22 = (1.0 + t12 * t21) / t11;  // det = 1
    const TransferMatrix t{t11, t12, t21, t22};

    const double b = t11 + t22;
    const double disc = b * b - 4.0 * t21 * t12;
    if (disc < 1e-6) continue;  // need well-separated real roots
    const double sq = std::sqrt(disc);
    for (double root : {(-b + sq) / (2.0 * t21), (-b - sq) / (2.0 * t21)}) {
      if (!(root > 1e-6)) continue;
      const double lo = root * 0.99, hi = root * 1.01;
      double f_lo = bound_residual_from_matrix(t, lo);
      double f_hi = bound_residual_from_matrix(t, hi);
      if ((f_lo < 0.0) == (f_hi < 0.0)) continue;  // another root nearby
      double a = lo, c = hi;
      while (c - a > 1e-12 * std::max(1.0, root)) {
        const double mid = 0.5 * (a + c);
        const double f_mid = bound_residual_from_matrix(t, mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
          a = mid;
          f_lo = f_mid;
        } else {
          c = mid;
        }
      }
      CHECK(std::abs(0.5 * (a + c) - root) < 1e-10 * std::max(1.0, root));
      ++verified;
    }
  }
  CHECK(verified > 100);
}

TEST_CASE("adaptive simpson sanity") {
  const double integral =
      adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-11);
  CHECK(integral == doctest::Approx(2.0).epsilon(1e-10));
  CHECK_THROWS_AS(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0, 1e-10),
                  InvalidParams);
}

TEST_CASE("norm quadrature") {
  SUBCASE("symmetric unit state") {
    const BoundState state{-0.5, 1.0, 0.0, 1.0, 1.0, 1.0};
    CHECK(std::abs(norm_quadrature(state, 40.0) - 1.0) < 1e-8);
  }
  SUBCASE("asymmetric constant-coupling state") {
    const BoundState state{-0.02, 0.2, 2.0, -0.2, 0.6, 1.0};
    CHECK(std::abs(norm_quadrature(state, 200.0) - 1.0) < 1e-8);
  }
  SUBCASE("domain guard") {
    const BoundState state{-0.5, 1.0, 0.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(norm_quadrature(state, 29.0), BadDomain);
  }
  SUBCASE("property: quadrature equals (A^2+B^2)/(2 kappa) on random states") {
    std::mt19937_64 rng(600613);
    for (int i = 0; i < 100; ++i) {
      const double mu = uniform(rng, 0.05, 3.0);
      const CouplingFunction f =
          (i % 2 == 0) ? CouplingFunction::constant(uniform(rng, -3.0, 3.0))
                       : CouplingFunction::exponential_decay(uniform(rng, -3.0, 3.0),
                                                             uniform(rng, 0.1, 10.0));
      const BoundState state = make_bound_state(mu, f);
      const double closed =
          (state.a * state.a + state.b * state.b) / (2.0 * state.kappa);
      const double quad = norm_quadrature(state, 32.0 / state.kappa);
      CHECK(std::abs(quad - closed) <= 1e-8 * closed);
    }
  }
}

TEST_CASE("finite difference oracle") {
  CHECK(finite_difference(CouplingFunction::constant(3.3), 1.0, 1e-6) == 0.0);
  CHECK(std::abs(finite_difference(CouplingFunction::exponential_decay(1.0, 1.0), 0.0,
                                   1e-6) +
                 1.0) < 1e-6);
  CHECK(std::abs(finite_difference(CouplingFunction::power_series({0.0, 2.0}), 0.3,
                                   1e-6) -
                 2.0) < 1e-9);
  CHECK_THROWS_AS(finite_difference(CouplingFunction::constant(1.0), 0.0, 0.0),
                  InvalidParams);
}

TEST_CASE("bound energy via the matrix residual matches solve_energy") {
  std::mt19937_64 rng(112358);
  for (int i = 0; i < 100; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    CouplingFunction f = CouplingFunction::constant(uniform(rng, -0.95, 0.95));
    if (i % 2 == 1) {
      const double e0 = uniform(rng, 0.5, 10.0);
      const double cap = 0.95 * std::exp(-0.5 * mu * mu / e0);
      f = CouplingFunction::exponential_decay(uniform(rng, -cap, cap), e0);
    }
    CHECK(std::abs(solve_energy(mu, f) - bound_energy_from_matrix_residual(mu, f)) <
          1e-10);
  }
}
