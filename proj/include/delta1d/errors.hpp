#pragma once

#include <stdexcept>
#include <string>

namespace delta1d {

/// Construction-time parameter rejection (bad coupling, inconsistent matrix params, bad grid).
struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// The delta-prime matching degenerates at F = +-1.
struct SingularCoupling : std::runtime_error {
  explicit SingularCoupling(const std::string& what) : std::runtime_error(what) {}
};

/// alpha + gamma = 2 has no xi image.
struct SingularConversion : std::runtime_error {
  explicit SingularConversion(const std::string& what) : std::runtime_error(what) {}
};

/// The 2x2 scattering solve is singular.
struct DegenerateSystem : std::runtime_error {
  explicit DegenerateSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Root bracketing failed (pathological couplings only).
struct NoSignChange : std::runtime_error {
  explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature domain too small for the requested decay rate.
struct BadDomain : std::invalid_argument {
  explicit BadDomain(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace delta1d
