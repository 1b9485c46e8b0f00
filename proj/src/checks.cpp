#include "delta1d/checks.hpp"

#include <cmath>
#include <random>

#include "delta1d/bound_state.hpp"
#include "delta1d/scattering.hpp"

namespace delta1d {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

ModelSpec draw_model(std::mt19937_64& rng, int which, double lambda_cap) {
  const double mu = uniform(rng, 0.05, 5.0);
  switch (which % 3) {
    case 0:
      return PureDelta{mu};
    case 1:
      return ConstantDeltaPrime{mu, uniform(rng, -lambda_cap, lambda_cap)};
    default:
      return EnergyDependent{
          mu, CouplingFunction::exponential_decay(uniform(rng, -lambda_cap, lambda_cap),
                                                  log_uniform(rng, 0.1, 10.0))};
  }
}

// g(E) = E + (mu^2/2)/(1+F(E)^2)^2, recomputed here so the scan does not
// depend on the solver internals.
double energy_scan_fn(double mu, const CouplingFunction& f, double e) {
  const double fv = f(e);
  const double w = 1.0 + fv * fv;
  return e + 0.5 * mu * mu / (w * w);
}

ResidualReport check_unitarity_closed_form(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ModelSpec model = draw_model(rng, i, 3.0);
    const double k = log_uniform(rng, 1e-3, 1e3);
    worst = std::max(worst, std::abs(closed_form(model, k).unitarity_residual()));
  }
  return ResidualReport::make("unitarity/closed-form", worst, 1e-12);
}

ResidualReport check_unitarity_matrix_route(std::mt19937_64& rng, int draws,
                                            bool inject_fault) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ModelSpec model = draw_model(rng, i, 0.9);
    const double k = log_uniform(rng, 1e-3, 1e3);
    TransferMatrix t = model_matrix(model, k);
    if (inject_fault) t.t11 = -t.t11;
    worst = std::max(worst, std::abs(scatter_from_matrix(t, k).unitarity_residual()));
  }
  return ResidualReport::make("unitarity/matrix-route", worst, 1e-12);
}

ResidualReport check_reduction_lambda0_zero(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 5.0);
    const double e0 = log_uniform(rng, 0.1, 10.0);
    const double k = log_uniform(rng, 1e-2, 1e2);
    const auto dependent = closed_form(
        EnergyDependent{mu, CouplingFunction::exponential_decay(0.0, e0)}, k);
    const auto pure = closed_form(PureDelta{mu}, k);
    worst = std::max({worst, std::abs(dependent.r - pure.r), std::abs(dependent.s - pure.s)});
  }
  return ResidualReport::make("reduction/lambda0-zero", worst, 0.0);
}

ResidualReport check_reduction_constant_coupling(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 5.0);
    const double lambda = uniform(rng, -3.0, 3.0);
    const double k = log_uniform(rng, 1e-2, 1e2);
    const auto dependent =
        closed_form(EnergyDependent{mu, CouplingFunction::constant(lambda)}, k);
    const auto fixed = closed_form(ConstantDeltaPrime{mu, lambda}, k);
    worst = std::max({worst, std::abs(dependent.r - fixed.r), std::abs(dependent.s - fixed.s)});
  }
  return ResidualReport::make("reduction/constant-coupling", worst, 1e-14);
}

ResidualReport check_scattering_oracle(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ModelSpec model = draw_model(rng, i, 0.9);
    const double k = log_uniform(rng, 1e-2, 1e2);
    const auto direct = closed_form(model, k);
    const auto via_matrix = scatter_from_matrix(model_matrix(model, k), k);
    worst = std::max({worst, std::abs(direct.r - via_matrix.r),
                      std::abs(direct.s - via_matrix.s)});
  }
  return ResidualReport::make("oracle/scattering-equivalence", worst, 1e-12);
}

// lambda0 capped so |F| stays below 1 over the whole bracket; the matrix
// residual has a pole at F = +-1.
CouplingFunction draw_regular_bound_coupling(std::mt19937_64& rng, int which,
                                             double mu) {
  if (which % 2 == 0) {
    return CouplingFunction::constant(uniform(rng, -0.95, 0.95));
  }
  const double e0 = log_uniform(rng, 0.5, 10.0);
  const double cap = 0.95 * std::exp(-0.5 * mu * mu / e0);
  return CouplingFunction::exponential_decay(uniform(rng, -cap, cap), e0);
}

ResidualReport check_bound_energy_oracle(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    const CouplingFunction f = draw_regular_bound_coupling(rng, i, mu);
    worst = std::max(worst, std::abs(solve_energy(mu, f) -
                                     bound_energy_from_matrix_residual(mu, f)));
  }
  return ResidualReport::make("oracle/bound-energy", worst, 1e-10);
}

CouplingFunction draw_bound_coupling(std::mt19937_64& rng, int which) {
  const double lambda0 = uniform(rng, -3.0, 3.0);
  if (which % 2 == 0) return CouplingFunction::constant(lambda0);
  return CouplingFunction::exponential_decay(lambda0, log_uniform(rng, 0.1, 10.0));
}

ResidualReport check_norm_identity(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    const CouplingFunction f = draw_bound_coupling(rng, i);
    const BoundState state = make_bound_state(mu, f);
    worst = std::max(worst, std::abs(norm_identity_residual(state, f)));
  }
  return ResidualReport::make("bound/norm-identity", worst, 1e-10);
}

ResidualReport check_norm_quadrature(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    const CouplingFunction f = draw_bound_coupling(rng, i);
    const BoundState state = make_bound_state(mu, f);
    const double closed =
        (state.a * state.a + state.b * state.b) / (2.0 * state.kappa);
    const double quad = norm_quadrature(state, 32.0 / state.kappa);
    worst = std::max(worst, std::abs(quad - closed) / closed);
  }
  return ResidualReport::make("bound/norm-quadrature", worst, 1e-8);
}

ResidualReport check_matching_consistency(std::mt19937_64& rng, int draws) {
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    const CouplingFunction f = draw_bound_coupling(rng, i);
    const BoundState state = make_bound_state(mu, f);
    const double lam = state.lambda_e;
    worst = std::max({worst, std::abs(state.kappa * (1.0 + lam * lam) - mu),
                      std::abs(state.b * (1.0 - lam) - state.a * (1.0 + lam))});
  }
  return ResidualReport::make("bound/matching-consistency", worst, 1e-10);
}

ResidualReport check_energy_bracket(std::mt19937_64& rng, int draws) {
  double violation = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    const CouplingFunction f = draw_bound_coupling(rng, i);
    const double e = solve_energy(mu, f);
    violation = std::max({violation, -0.5 * mu * mu - e, e >= 0.0 ? e + 1.0 : 0.0});
  }
  return ResidualReport::make("bound/energy-bracket", violation, 0.0);
}

ResidualReport check_uniqueness_scan(std::mt19937_64& rng, int draws) {
  int worst_deviation = 0;
  for (int i = 0; i < draws; ++i) {
    const double mu = uniform(rng, 0.05, 3.0);
    const CouplingFunction f = draw_bound_coupling(rng, i);
    int sign_changes = 0;
    double prev = energy_scan_fn(mu, f, -0.5 * mu * mu);
    for (int j = 1; j <= 1000; ++j) {
      const double e = -0.5 * mu * mu * (1.0 - static_cast<double>(j) / 1000.0);
      const double cur = energy_scan_fn(mu, f, e);
      if ((prev < 0.0 && cur >= 0.0) || (prev >= 0.0 && cur < 0.0)) ++sign_changes;
      prev = cur;
    }
    worst_deviation = std::max(worst_deviation, std::abs(sign_changes - 1));
  }
  return ResidualReport::make("bound/uniqueness-scan",
                              static_cast<double>(worst_deviation), 0.0);
}

}  // namespace

std::vector<ResidualReport> run_check_suite(const CheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  const int n = options.draws;
  std::vector<ResidualReport> reports;
  reports.push_back(check_unitarity_closed_form(rng, n));
  reports.push_back(check_unitarity_matrix_route(rng, n, options.inject_sign_flip_fault));
  reports.push_back(check_reduction_lambda0_zero(rng, n));
  reports.push_back(check_reduction_constant_coupling(rng, n));
  reports.push_back(check_scattering_oracle(rng, n));
  reports.push_back(check_bound_energy_oracle(rng, std::min(n, 200)));
  reports.push_back(check_norm_identity(rng, n));
  reports.push_back(check_norm_quadrature(rng, std::min(n, 60)));
  reports.push_back(check_matching_consistency(rng, n));
  reports.push_back(check_energy_bracket(rng, n));
  reports.push_back(check_uniqueness_scan(rng, std::min(n, 100)));
  return reports;
}

bool all_passed(const std::vector<ResidualReport>& reports) {
  for (const auto& report : reports) {
    if (!report.passed) return false;
  }
  return true;
}

}  // namespace delta1d
