#pragma once

#include <optional>
#include <span>

#include "delta1d/coupling.hpp"
#include "delta1d/sweep_table.hpp"

namespace delta1d {

/// The single bound state of -(1/2) d^2/dx^2 - mu delta(x) + F(E) delta'(x):
/// psi(x) = A e^{kappa x} (x<0), B e^{-kappa x} (x>0), kappa = sqrt(-2E).
/// Satisfies kappa (1 + lambda_e^2) = mu and B (1 - lambda_e) = A (1 + lambda_e),
/// and the modified-norm identity
///   (A^2+B^2)/(2 kappa) + kappa F'(E) (A^2-B^2) = 1
/// (the F' term is -lambda_e/E0 for the exponential decay, 0 for constants).
struct BoundState {
  double energy;    // < 0
  double kappa;     // sqrt(-2 energy)
  double lambda_e;  // F(energy)
  double a;         // left amplitude
  double b;         // right amplitude
  double mu;        // effective delta strength at the solved energy
};

/// Unique root E in [-mu^2/2, 0) of E = -(mu^2/2)/(1 + F(E)^2)^2.
/// Bisection on the guaranteed bracket, then Newton polish; the residual
/// |E (1+F(E)^2)^2 + mu^2/2| ends below 1e-12 max(1, mu^2/2).
/// For F identically zero returns -mu^2/2 directly.
/// Throws NoSignChange when the bracket fails (pathological series couplings).
double solve_energy(double mu, const CouplingFunction& f);

/// Generalized-coupling solve: kappa(E) (1 + F(E)^2) = G(E) on a bracket
/// [-G_max^2/2, 0) with G_max estimated by sampling G over the bracket.
/// Experimental surface for the -G(E) delta(x) + F(E) delta'(x) family;
/// requires G > 0 at the root (attractive delta term).
double solve_energy(const CouplingFunction& g, const CouplingFunction& f);

/// Normalized amplitudes (A, B) at the solved energy:
///   A = (1 - lambda_E) X,  B = (1 + lambda_E) X,
///   X = [ (1+lambda_E^2)/kappa - 4 kappa lambda_E F'(E) ]^{-1/2},
/// which reproduces sqrt(mu (1+l^2) / ((1+l^2)^3 + 4 l^2 mu^2 / E0)) for the
/// exponential decay and the constant-coupling closed form at E0 = infinity.
std::pair<double, double> amplitudes(double mu, const CouplingFunction& f, double energy);

/// Solve + normalize in one step.
BoundState make_bound_state(double mu, const CouplingFunction& f);

/// Generalized version; the G'(E) psi_bar(0)^2 term joins the norm
/// correction. The stored mu is G evaluated at the solved energy.
BoundState make_bound_state(const CouplingFunction& g, const CouplingFunction& f);

/// A e^{kappa x} for x < 0, B e^{-kappa x} for x > 0, the one-point average
/// (A+B)/2 at x = 0.
double wavefunction_eval(const BoundState& state, double x);

/// Left side of the modified-norm identity minus one; ~1e-16 for states
/// produced by make_bound_state.
double norm_identity_residual(const BoundState& state, const CouplingFunction& f);
double norm_identity_residual(const BoundState& state, const CouplingFunction& g,
                              const CouplingFunction& f);

/// The lambda0 making lambda_E = sign (+1 or -1) at the solved energy:
/// sign * exp(-mu^2/(8 E0)). The matching amplitude (A for +1, B for -1)
/// vanishes and the state lives on a half line.
double half_line_lambda0(double mu, double e0, int sign);

/// One row per lambda0: lambda0, E, kappa, lambda_E, A, B, norm_residual.
/// e0 = nullopt means the constant-coupling (E0 = infinity) family.
/// Per-row failures become flagged rows.
SweepTable energy_sweep(double mu, std::optional<double> e0,
                        std::span<const double> lambda0_grid);

}  // namespace delta1d
