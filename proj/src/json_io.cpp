#include "delta1d/json_io.hpp"

#include "delta1d/errors.hpp"

namespace delta1d {

namespace {

double require_number(const nlohmann::json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number()) {
    throw InvalidParams(std::string("coupling: missing numeric field '") + key + "'");
  }
  return spec[key].get<double>();
}

}  // namespace

CouplingFunction coupling_from_json(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("type") || !spec["type"].is_string()) {
    throw InvalidParams("coupling: expected an object with a string 'type'");
  }
  const std::string type = spec["type"].get<std::string>();
  if (type == "constant") {
    return CouplingFunction::constant(require_number(spec, "value"));
  }
  if (type == "exp") {
    const double lambda0 = require_number(spec, "lambda0");
    if (spec.contains("e0") && spec["e0"].is_string()) {
      if (spec["e0"].get<std::string>() == "inf") {
        return CouplingFunction::constant(lambda0);
      }
      throw InvalidParams("coupling: 'e0' string value must be \"inf\"");
    }
    return CouplingFunction::exponential_decay(lambda0, require_number(spec, "e0"));
  }
  if (type == "series") {
    if (!spec.contains("coeffs") || !spec["coeffs"].is_array()) {
      throw InvalidParams("coupling: 'series' needs a 'coeffs' array");
    }
    std::vector<double> coeffs;
    for (const auto& c : spec["coeffs"]) {
      if (!c.is_number()) throw InvalidParams("coupling: coefficients must be numbers");
      coeffs.push_back(c.get<double>());
    }
    return CouplingFunction::power_series(std::move(coeffs));
  }
  throw InvalidParams("coupling: unknown type '" + type + "'");
}

nlohmann::json report_to_json(const ResidualReport& report) {
  return {{"context", report.context},
          {"value", report.value},
          {"tolerance", report.tolerance},
          {"passed", report.passed}};
}

}  // namespace delta1d
