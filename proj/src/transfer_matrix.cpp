#include "delta1d/transfer_matrix.hpp"

#include <cmath>

#include "delta1d/errors.hpp"

namespace delta1d {

namespace {

constexpr double kSingularTol = 1e-12;

void require_consistent(const XiParams& p) {
  if (p.Delta == 0.0 || !std::isfinite(p.Delta)) {
    throw InvalidParams("xi params: Delta must be nonzero and finite");
  }
  const double res = p.consistency_residual();
  if (std::abs(res) > kSingularTol * std::max(1.0, std::abs(p.Delta))) {
    throw InvalidParams("xi params: Delta inconsistent with (1 - xi2^2) + xi1*xi3");
  }
}

void require_unimodular(const AbgdParams& p) {
  const double scale =
      std::max(1.0, std::abs(p.alpha * p.gamma) + std::abs(p.beta * p.delta));
  if (std::abs(p.constraint_residual()) > kSingularTol * scale) {
    throw InvalidParams("abgd params: alpha*gamma - beta*delta must equal 1");
  }
}

}  // namespace

TransferMatrix pure_delta_matrix(double strength) {
  return {1.0, 2.0 * strength, 0.0, 1.0};
}

TransferMatrix delta_delta_prime_matrix(double g, double f) {
  if (std::abs(f - 1.0) < kSingularTol || std::abs(f + 1.0) < kSingularTol) {
    throw SingularCoupling("delta_delta_prime_matrix: F = +-1 degenerates the matching");
  }
  const double one_minus = 1.0 - f;
  const double one_plus = 1.0 + f;
  return {one_minus / one_plus, -2.0 * g / (one_minus * one_plus), 0.0,
          one_plus / one_minus};
}

TransferMatrix matrix_from_xi(const XiParams& p) {
  require_consistent(p);
  const double scale = -1.0 / p.Delta;
  return {scale * (p.Delta - 2.0 * (1.0 - p.xi2)), scale * (-2.0 * p.xi1),
          scale * (2.0 * p.xi3), scale * (p.Delta - 2.0 * (1.0 + p.xi2))};
}

XiParams xi_from_abgd(const AbgdParams& p) {
  require_unimodular(p);
  const double trace_gap = 2.0 - p.alpha - p.gamma;
  if (std::abs(trace_gap) < kSingularTol) {
    throw SingularConversion("xi_from_abgd: alpha + gamma = 2 has no xi image");
  }
  const double big_delta = 4.0 / trace_gap;
  return {-p.beta * big_delta / 2.0, (p.alpha - p.gamma) * big_delta / 4.0,
          p.delta * big_delta / 2.0, big_delta};
}

AbgdParams abgd_from_xi(const XiParams& p) {
  require_consistent(p);
  return {1.0 - 2.0 * (1.0 - p.xi2) / p.Delta, -2.0 * p.xi1 / p.Delta,
          2.0 * p.xi3 / p.Delta, 1.0 - 2.0 * (1.0 + p.xi2) / p.Delta};
}

}  // namespace delta1d
