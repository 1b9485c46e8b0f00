#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace delta1d {

/// Energy-dependent coupling strength F(E) (or G(E)) of a point-interaction
/// term. Three shapes: a constant, an exponential decay
/// F(E) = lambda0 * exp(-E/E0), or a truncated power series sum c_n E^n.
///
/// Values are immutable after construction; evaluation is pure and
/// thread-safe.
class CouplingFunction {
 public:
  struct Constant {
    double value;
  };
  struct ExponentialDecay {
    double lambda0;
    double e0;  // > 0, checked at construction
  };
  struct PowerSeries {
    std::vector<double> coeffs;  // c0..cN, non-empty
  };

  static CouplingFunction constant(double value);
  /// Throws InvalidParams unless e0 > 0 and finite.
  static CouplingFunction exponential_decay(double lambda0, double e0);
  /// Throws InvalidParams on an empty coefficient list.
  static CouplingFunction power_series(std::vector<double> coeffs);

  /// F(E). The exponential argument -E/E0 is clamped to [-700, 700] so the
  /// deep bound-state probes (E << 0) stay finite.
  double evaluate(double energy) const;
  double operator()(double energy) const { return evaluate(energy); }

  /// Analytic dF/dE: 0 for constants, -F(E)/E0 for the decay,
  /// sum n c_n E^(n-1) for series.
  double derivative(double energy) const;

  /// lim_{E->inf} F(E); nullopt marks a divergent series.
  std::optional<double> high_energy_limit() const;

  /// True when F vanishes for every E (constant 0, lambda0 = 0, all-zero
  /// coefficients).
  bool is_identically_zero() const;

  bool is_constant() const;

  const std::variant<Constant, ExponentialDecay, PowerSeries>& shape() const {
    return shape_;
  }

 private:
  explicit CouplingFunction(std::variant<Constant, ExponentialDecay, PowerSeries> shape)
      : shape_(std::move(shape)) {}

  std::variant<Constant, ExponentialDecay, PowerSeries> shape_;
};

}  // namespace delta1d
