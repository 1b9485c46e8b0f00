#include "delta1d/scattering.hpp"

#include <cmath>
#include <limits>

#include "delta1d/errors.hpp"

namespace delta1d {

namespace {

using complexd = std::complex<double>;
constexpr complexd kI{0.0, 1.0};

void require_positive_mu(double mu, const char* model) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InvalidParams(std::string(model) + ": mu must be positive");
  }
}

ScatteringResult delta_prime_closed_form(double mu, double lambda, double k) {
  const complexd denom = mu + kI * k * (1.0 + lambda * lambda);
  const complexd r = -(mu + 2.0 * kI * k * lambda) / denom;
  const complexd s = kI * k * (1.0 - lambda * lambda) / denom;
  return {k, r, s};
}

}  // namespace

ModelSpec make_model(ModelSpec model) {
  if (const auto* m = std::get_if<ConstantDeltaPrime>(&model)) {
    require_positive_mu(m->mu, "ConstantDeltaPrime");
  } else if (const auto* m = std::get_if<EnergyDependent>(&model)) {
    require_positive_mu(m->mu, "EnergyDependent");
  }
  return model;
}

ScatteringResult scatter_from_matrix(const TransferMatrix& t, double k) {
  if (!(k > 0.0)) throw InvalidParams("scatter_from_matrix: k must be positive");
  // Matching system in the unknowns (r, s):
  //   (ik t11 - t12) r + ik s = ik t11 + t12
  //   (ik t21 - t22) r +    s = ik t21 + t22
  const complexd ik = kI * k;
  const complexd a11 = ik * t.t11 - t.t12;
  const complexd a12 = ik;
  const complexd a21 = ik * t.t21 - t.t22;
  const complexd a22 = 1.0;
  const complexd b1 = ik * t.t11 + t.t12;
  const complexd b2 = ik * t.t21 + t.t22;

  const complexd det = a11 * a22 - a12 * a21;
  const double scale = std::abs(a11) + std::abs(a12) * std::abs(a21);
  if (std::abs(det) < 1e-14 * std::max(1.0, scale)) {
    throw DegenerateSystem("scatter_from_matrix: matching system is singular");
  }
  const complexd r = (b1 * a22 - a12 * b2) / det;
  const complexd s = (a11 * b2 - a21 * b1) / det;
  return {k, r, s};
}

TransferMatrix model_matrix(const ModelSpec& model, double k) {
  const double energy = 0.5 * k * k;
  struct Visitor {
    double energy;
    TransferMatrix operator()(const PureDelta& m) const {
      return pure_delta_matrix(-m.mu);
    }
    TransferMatrix operator()(const ConstantDeltaPrime& m) const {
      return delta_delta_prime_matrix(m.mu, m.lambda);
    }
    TransferMatrix operator()(const EnergyDependent& m) const {
      return delta_delta_prime_matrix(m.mu, m.f(energy));
    }
    TransferMatrix operator()(const General& m) const {
      return delta_delta_prime_matrix(m.g(energy), m.f(energy));
    }
  };
  return std::visit(Visitor{energy}, model);
}

ScatteringResult closed_form(const ModelSpec& model, double k) {
  if (!(k > 0.0)) throw InvalidParams("closed_form: k must be positive");
  struct Visitor {
    double k;
    ScatteringResult operator()(const PureDelta& m) const {
      // lambda = 0 specialization: r = -mu/(mu+ik), s = ik/(mu+ik). Shares
      // the delta-prime arithmetic so the lambda0 = 0 reduction is exact.
      return delta_prime_closed_form(m.mu, 0.0, k);
    }
    ScatteringResult operator()(const ConstantDeltaPrime& m) const {
      return delta_prime_closed_form(m.mu, m.lambda, k);
    }
    ScatteringResult operator()(const EnergyDependent& m) const {
      return delta_prime_closed_form(m.mu, m.f(0.5 * k * k), k);
    }
    ScatteringResult operator()(const General& m) const {
      return scatter_from_matrix(delta_delta_prime_matrix(m.g(0.5 * k * k),
                                                          m.f(0.5 * k * k)),
                                 k);
    }
  };
  return std::visit(Visitor{k}, model);
}

SweepTable transmission_sweep(const ModelSpec& model, std::span<const double> k_grid) {
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (!(k_grid[i] > 0.0)) {
      throw InvalidParams("transmission_sweep: grid points must be positive");
    }
    if (i > 0 && !(k_grid[i] > k_grid[i - 1])) {
      throw InvalidParams("transmission_sweep: grid must be strictly increasing");
    }
  }
  SweepTable table;
  table.columns = {"k",      "re_r",   "im_r",   "re_s",
                   "im_s",   "abs_r2", "abs_s2", "unitarity_residual"};
  table.rows.reserve(k_grid.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double k : k_grid) {
    SweepTable::Row row;
    try {
      const ScatteringResult res = closed_form(model, k);
      row.values = {k,
                    res.r.real(),
                    res.r.imag(),
                    res.s.real(),
                    res.s.imag(),
                    std::norm(res.r),
                    std::norm(res.s),
                    res.unitarity_residual()};
    } catch (const std::exception& e) {
      row.values = {k, nan, nan, nan, nan, nan, nan, nan};
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace delta1d
