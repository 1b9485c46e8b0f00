#pragma once

#include "delta1d/coupling.hpp"
#include "delta1d/oracles.hpp"
#include "json.hpp"

namespace delta1d {

/// Coupling from a JSON fragment:
///   {"type":"constant","value":x}
///   {"type":"exp","lambda0":x,"e0":y}   ("e0":"inf" maps to the constant)
///   {"type":"series","coeffs":[c0,...]}
/// Throws InvalidParams on unknown shapes or bad parameters.
CouplingFunction coupling_from_json(const nlohmann::json& spec);

nlohmann::json report_to_json(const ResidualReport& report);

}  // namespace delta1d
