#pragma once

namespace delta1d {

/// 2x2 real matching matrix of a point interaction at x = 0, acting on the
/// one-sided boundary data: (psi'_+, psi_+) = T * (psi'_-, psi_-).
/// Every constructor in this module produces det T = 1 (within 1e-12).
/// Natural units m = hbar = 1: t12 carries inverse length, t21 length.
struct TransferMatrix {
  double t11 = 1.0;
  double t12 = 0.0;
  double t21 = 0.0;
  double t22 = 1.0;

  double det() const { return t11 * t22 - t12 * t21; }
  static TransferMatrix identity() { return {}; }
};

/// Boundary-condition parameters (alpha beta; delta gamma) with
/// alpha*gamma - beta*delta = 1. These are the physical matrix entries; the
/// global e^{i theta} phase is handled by the conversions, not stored here.
struct AbgdParams {
  double alpha;
  double beta;
  double delta;
  double gamma;

  double constraint_residual() const { return alpha * gamma - beta * delta - 1.0; }
};

/// The symmetric-combination parametrization:
///   psi'_+ - psi'_- = xi1 (psi_+ + psi_-) - xi2 (psi'_+ + psi'_-)
///   psi_+  - psi_-  = xi2 (psi_+ + psi_-) - xi3 (psi'_+ + psi'_-)
/// with the stored Delta = (1 - xi2^2) + xi1*xi3 (the determinant of the
/// left-hand matching system; Delta != 0).
struct XiParams {
  double xi1;
  double xi2;
  double xi3;
  double Delta;

  double consistency_residual() const {
    return Delta - ((1.0 + xi2) * (1.0 - xi2) + xi1 * xi3);
  }
};

/// Matching matrix [[1, 2 c0],[0, 1]] of V(x) = 2 c0 delta(x). A Hamiltonian
/// term -mu*delta(x) corresponds to strength = -mu.
TransferMatrix pure_delta_matrix(double strength);

/// Matching matrix of the delta-delta' pair -G delta(x) + F delta'(x):
///   [[(1-F)/(1+F), -2G/(1-F^2)], [0, (1+F)/(1-F)]].
/// Reduces to pure_delta_matrix(-G) at F = 0. Throws SingularCoupling when
/// |F -+ 1| < 1e-12 (the half-line regime; the matching degenerates).
TransferMatrix delta_delta_prime_matrix(double g, double f);

/// T = -(1/Delta) [[Delta-2(1-xi2), -2 xi1],[2 xi3, Delta-2(1+xi2)]].
/// Carries the e^{i theta} = -1 convention, so the result may be the
/// physical matrix or its negative depending on the parameters; det is 1
/// either way. Throws InvalidParams on a Delta-inconsistent input.
TransferMatrix matrix_from_xi(const XiParams& p);

/// Eq. system Delta = 4/(2-alpha-gamma), xi1 = -beta*Delta/2,
/// xi2 = (alpha-gamma)*Delta/4, xi3 = delta*Delta/2.
/// Throws SingularConversion when |2-alpha-gamma| < 1e-12, InvalidParams on
/// a constraint-violating input.
XiParams xi_from_abgd(const AbgdParams& p);

/// Inverse of xi_from_abgd; the output satisfies alpha*gamma - beta*delta = 1.
AbgdParams abgd_from_xi(const XiParams& p);

}  // namespace delta1d
