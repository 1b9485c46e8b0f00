#pragma once

#include <cstdint>
#include <vector>

#include "delta1d/oracles.hpp"

namespace delta1d {

struct CheckOptions {
  std::uint64_t seed = 20250801;
  int draws = 400;
  /// Test hook: flips the sign of t11 inside the matrix-route unitarity
  /// check, which must then fail. Verifies the harness detects faults.
  bool inject_sign_flip_fault = false;
};

/// The self-check suite run by the CLI `check` command: unitarity (closed
/// form and matrix route), model reductions, scattering and bound-state
/// oracle equivalence, norm identity plus quadrature, matching consistency,
/// energy bracket, and the uniqueness scan. One report per check.
std::vector<ResidualReport> run_check_suite(const CheckOptions& options = {});

bool all_passed(const std::vector<ResidualReport>& reports);

}  // namespace delta1d
