#include "delta1d/coupling.hpp"

#include <algorithm>
#include <cmath>

#include "delta1d/errors.hpp"

namespace delta1d {

namespace {

// e^{+-700} spans the double range; beyond that the value saturates.
double clamped_exp(double arg) {
  return std::exp(std::clamp(arg, -700.0, 700.0));
}

}  // namespace

CouplingFunction CouplingFunction::constant(double value) {
  return CouplingFunction(Constant{value});
}

CouplingFunction CouplingFunction::exponential_decay(double lambda0, double e0) {
  if (!(e0 > 0.0) || !std::isfinite(e0)) {
    throw InvalidParams("exponential_decay: E0 must be positive and finite");
  }
  return CouplingFunction(ExponentialDecay{lambda0, e0});
}

CouplingFunction CouplingFunction::power_series(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw InvalidParams("power_series: coefficient list must be non-empty");
  }
  return CouplingFunction(PowerSeries{std::move(coeffs)});
}

double CouplingFunction::evaluate(double energy) const {
  struct Visitor {
    double energy;
    double operator()(const Constant& c) const { return c.value; }
    double operator()(const ExponentialDecay& d) const {
      return d.lambda0 * clamped_exp(-energy / d.e0);
    }
    double operator()(const PowerSeries& p) const {
      // Horner over the supplied (finite) coefficient list.
      double acc = 0.0;
      for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * energy + *it;
      }
      return acc;
    }
  };
  return std::visit(Visitor{energy}, shape_);
}

double CouplingFunction::derivative(double energy) const {
  struct Visitor {
    const CouplingFunction& self;
    double energy;
    double operator()(const Constant&) const { return 0.0; }
    double operator()(const ExponentialDecay& d) const {
      return -self.evaluate(energy) / d.e0;
    }
    double operator()(const PowerSeries& p) const {
      double acc = 0.0;
      for (std::size_t n = p.coeffs.size(); n-- > 1;) {
        acc = acc * energy + static_cast<double>(n) * p.coeffs[n];
      }
      return acc;
    }
  };
  return std::visit(Visitor{*this, energy}, shape_);
}

std::optional<double> CouplingFunction::high_energy_limit() const {
  struct Visitor {
    std::optional<double> operator()(const Constant& c) const { return c.value; }
    std::optional<double> operator()(const ExponentialDecay&) const { return 0.0; }
    std::optional<double> operator()(const PowerSeries& p) const {
      for (std::size_t n = 1; n < p.coeffs.size(); ++n) {
        if (p.coeffs[n] != 0.0) return std::nullopt;
      }
      return p.coeffs.front();
    }
  };
  return std::visit(Visitor{}, shape_);
}

bool CouplingFunction::is_identically_zero() const {
  struct Visitor {
    bool operator()(const Constant& c) const { return c.value == 0.0; }
    bool operator()(const ExponentialDecay& d) const { return d.lambda0 == 0.0; }
    bool operator()(const PowerSeries& p) const {
      return std::all_of(p.coeffs.begin(), p.coeffs.end(),
                         [](double c) { return c == 0.0; });
    }
  };
  return std::visit(Visitor{}, shape_);
}

bool CouplingFunction::is_constant() const {
  struct Visitor {
    bool operator()(const Constant&) const { return true; }
    bool operator()(const ExponentialDecay& d) const { return d.lambda0 == 0.0; }
    bool operator()(const PowerSeries& p) const {
      for (std::size_t n = 1; n < p.coeffs.size(); ++n) {
        if (p.coeffs[n] != 0.0) return false;
      }
      return true;
    }
  };
  return std::visit(Visitor{}, shape_);
}

}  // namespace delta1d
