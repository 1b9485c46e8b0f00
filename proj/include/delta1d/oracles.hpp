#pragma once

#include <functional>
#include <string>

#include "delta1d/bound_state.hpp"
#include "delta1d/coupling.hpp"
#include "delta1d/transfer_matrix.hpp"

namespace delta1d {

/// One verification outcome; passed is exactly |value| <= tolerance.
struct ResidualReport {
  std::string context;
  double value;
  double tolerance;
  bool passed;

  static ResidualReport make(std::string context, double value, double tolerance);
};

/// Bound-state existence residual of a matching matrix at decay rate kappa:
///   t21 kappa^2 + (t11 + t22) kappa + t12,
/// from substituting psi_- = A, psi'_- = kappa A, psi_+ = B, psi'_+ = -kappa B
/// into the matching conditions. Zero iff the matrix admits a bound state
/// with that kappa.
double bound_residual_from_matrix(const TransferMatrix& t, double kappa);

/// Independent energy route: bisection on the matrix residual in E over
/// (-mu^2/2, 0). Valid while |F| stays below 1 on the bracket (the matrix
/// entries have a pole at F = +-1). Used to cross-check solve_energy.
double bound_energy_from_matrix_residual(double mu, const CouplingFunction& f);

/// Adaptive Simpson with per-panel tolerance and depth cap 40.
double adaptive_simpson(const std::function<double(double)>& fn, double lo, double hi,
                        double tolerance);

/// Quadrature of the smooth part of psi^2 over [-L, L], done per side so the
/// point mass at 0 stays excluded. Matches (A^2+B^2)/(2 kappa) to 1e-8
/// relative plus the e^{-2 kappa L} tail. Throws BadDomain when L < 30/kappa.
double norm_quadrature(const BoundState& state, double half_width);

/// Central difference (f(E+h) - f(E-h)) / (2h); h > 0.
double finite_difference(const CouplingFunction& f, double energy, double step);

}  // namespace delta1d
