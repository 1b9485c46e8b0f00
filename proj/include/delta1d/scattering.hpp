#pragma once

#include <complex>
#include <span>
#include <variant>

#include "delta1d/coupling.hpp"
#include "delta1d/sweep_table.hpp"
#include "delta1d/transfer_matrix.hpp"

namespace delta1d {

/// Reflection/transmission amplitudes of a left-incident plane wave e^{ikx}
/// at wavenumber k = sqrt(2E) > 0. Unitarity |r|^2 + |s|^2 = 1 holds to
/// 1e-12 for every result this module produces.
struct ScatteringResult {
  double k;
  std::complex<double> r;
  std::complex<double> s;

  double unitarity_residual() const { return std::norm(r) + std::norm(s) - 1.0; }
};

/// Point-interaction model selector.
///   PureDelta:          -(-mu) delta(x) jump, i.e. the textbook mu*delta well/barrier
///   ConstantDeltaPrime: -mu delta(x) + lambda delta'(x), mu > 0
///   EnergyDependent:    -mu delta(x) + F(E) delta'(x),   mu > 0
///   General:            -G(E) delta(x) + F(E) delta'(x)
struct PureDelta {
  double mu;  // any real; mu > 0 repulsive
};
struct ConstantDeltaPrime {
  double mu;  // > 0, checked by make_model
  double lambda;
};
struct EnergyDependent {
  double mu;  // > 0, checked by make_model
  CouplingFunction f;
};
struct General {
  CouplingFunction g;
  CouplingFunction f;
};

using ModelSpec = std::variant<PureDelta, ConstantDeltaPrime, EnergyDependent, General>;

/// Validates the mu > 0 requirement of the delta-delta' variants.
ModelSpec make_model(ModelSpec model);

/// Solves the matching system
///   iks = t11 ik(1-r) + t12 (1+r)
///   s   = t21 ik(1-r) + t22 (1+r)
/// for (r, s). Throws DegenerateSystem when the 2x2 solve is singular.
ScatteringResult scatter_from_matrix(const TransferMatrix& t, double k);

/// Closed-form coefficients per model:
///   PureDelta:          r = -mu/(mu+ik),           s = ik/(mu+ik)
///   ConstantDeltaPrime: r = -(mu+2ik l)/(mu+ik(1+l^2)), s = ik(1-l^2)/(mu+ik(1+l^2))
///   EnergyDependent:    same with l -> F(k^2/2)
///   General:            via scatter_from_matrix on delta_delta_prime_matrix
///                       (throws SingularCoupling where F(E) = +-1)
ScatteringResult closed_form(const ModelSpec& model, double k);

/// Matching matrix of the model at wavenumber k (couplings evaluated at
/// E = k^2/2). The independent route checked against closed_form.
TransferMatrix model_matrix(const ModelSpec& model, double k);

/// One row per grid point: k, Re r, Im r, Re s, Im s, |r|^2, |s|^2,
/// unitarity residual. Grid must be positive and strictly increasing.
/// Per-point failures become flagged rows, not aborts.
SweepTable transmission_sweep(const ModelSpec& model, std::span<const double> k_grid);

}  // namespace delta1d
