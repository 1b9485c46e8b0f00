#include "delta1d/oracles.hpp"

#include <cmath>

#include "delta1d/errors.hpp"

namespace delta1d {

namespace {

double simpson_panel(const std::function<double(double)>& fn, double lo, double hi,
                     double f_lo, double f_mid, double f_hi, double whole,
                     double tolerance, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double f_lmid = fn(lmid);
  const double f_rmid = fn(rmid);
  const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lmid + f_mid);
  const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rmid + f_hi);
  const double split = left + right;
  if (depth >= 40 || std::abs(split - whole) <= 15.0 * tolerance) {
    return split + (split - whole) / 15.0;
  }
  return simpson_panel(fn, lo, mid, f_lo, f_lmid, f_mid, left, 0.5 * tolerance,
                       depth + 1) +
         simpson_panel(fn, mid, hi, f_mid, f_rmid, f_hi, right, 0.5 * tolerance,
                       depth + 1);
}

}  // namespace

ResidualReport ResidualReport::make(std::string context, double value,
                                    double tolerance) {
  const bool passed = std::abs(value) <= tolerance;
  return {std::move(context), value, tolerance, passed};
}

double bound_residual_from_matrix(const TransferMatrix& t, double kappa) {
  if (!(kappa > 0.0)) {
    throw InvalidParams("bound_residual_from_matrix: kappa must be positive");
  }
  return t.t21 * kappa * kappa + (t.t11 + t.t22) * kappa + t.t12;
}

double bound_energy_from_matrix_residual(double mu, const CouplingFunction& f) {
  if (!(mu > 0.0)) {
    throw InvalidParams("bound_energy_from_matrix_residual: mu must be positive");
  }
  const auto residual = [&](double energy) {
    return bound_residual_from_matrix(delta_delta_prime_matrix(mu, f(energy)),
                                      std::sqrt(-2.0 * energy));
  };
  // residual > 0 at E = -mu^2/2 (kappa = mu overshoots) and < 0 near 0
  // while |F| < 1; bisection is exact-bracket safe.
  double lo = -0.5 * mu * mu;
  double hi = -0.5 * mu * mu * 1e-16;
  double r_lo = residual(lo);
  if (r_lo == 0.0) return lo;
  const double r_hi = residual(hi);
  if (!(r_lo > 0.0) || !(r_hi < 0.0)) {
    throw NoSignChange("bound_energy_from_matrix_residual: residual bracket failed");
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r_mid = residual(mid);
    if (r_mid == 0.0) return mid;
    if (r_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double adaptive_simpson(const std::function<double(double)>& fn, double lo, double hi,
                        double tolerance) {
  if (!(hi > lo)) throw InvalidParams("adaptive_simpson: need lo < hi");
  const double mid = 0.5 * (lo + hi);
  const double f_lo = fn(lo);
  const double f_mid = fn(mid);
  const double f_hi = fn(hi);
  const double whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
  return simpson_panel(fn, lo, hi, f_lo, f_mid, f_hi, whole, tolerance, 0);
}

double norm_quadrature(const BoundState& state, double half_width) {
  if (!(state.kappa > 0.0)) {
    throw InvalidParams("norm_quadrature: state must have kappa > 0");
  }
  if (half_width < 30.0 / state.kappa) {
    throw BadDomain("norm_quadrature: half-width must cover 30 decay lengths");
  }
  const double kappa = state.kappa;
  const double a = state.a;
  const double b = state.b;
  const auto left = [a, kappa](double x) {
    const double psi = a * std::exp(kappa * x);
    return psi * psi;
  };
  const auto right = [b, kappa](double x) {
    const double psi = b * std::exp(-kappa * x);
    return psi * psi;
  };
  return adaptive_simpson(left, -half_width, 0.0, 1e-10) +
         adaptive_simpson(right, 0.0, half_width, 1e-10);
}

double finite_difference(const CouplingFunction& f, double energy, double step) {
  if (!(step > 0.0)) throw InvalidParams("finite_difference: step must be positive");
  return (f(energy + step) - f(energy - step)) / (2.0 * step);
}

}  // namespace delta1d
