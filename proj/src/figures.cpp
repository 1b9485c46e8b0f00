#include "delta1d/figures.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "delta1d/bound_state.hpp"
#include "delta1d/errors.hpp"
#include "delta1d/scattering.hpp"
#include "delta1d/sweep_table.hpp"
#include "json.hpp"

namespace delta1d {

namespace {

void emit_table(const std::filesystem::path& path, const SweepTable& table) {
  std::ostringstream out;
  table.write_csv(out);
  write_file_atomic(path, out.str());
}

SweepTable wavefunction_table(const BoundState& state, const std::vector<double>& xs) {
  SweepTable table;
  table.columns = {"x", "psi"};
  table.rows.reserve(xs.size());
  for (double x : xs) {
    table.rows.push_back({{x, wavefunction_eval(state, x)}, {}});
  }
  return table;
}

FigureOutput figure1(const std::filesystem::path& dir) {
  // Transmission vs k at mu = lambda0 = 1; k0 = inf is the constant-coupling
  // curve whose plateau is (1-lambda^2)/(1+lambda^2) = 0.
  const std::vector<double> grid = log_grid(1e-2, 1e2, 400);
  nlohmann::json curves = nlohmann::json::array();
  FigureOutput out;
  const std::vector<std::pair<std::string, double>> k0_values = {
      {"inf", 0.0}, {"4", 4.0}, {"2", 2.0}, {"1", 1.0}};
  for (const auto& [label, k0] : k0_values) {
    const ModelSpec model =
        label == "inf"
            ? ModelSpec{ConstantDeltaPrime{1.0, 1.0}}
            : ModelSpec{EnergyDependent{
                  1.0, CouplingFunction::exponential_decay(1.0, 0.5 * k0 * k0)}};
    const std::filesystem::path file = dir / ("fig1_k0_" + label + ".csv");
    emit_table(file, transmission_sweep(model, grid));
    nlohmann::json curve = {{"file", file.filename().string()},
                            {"mu", 1.0},
                            {"lambda0", 1.0}};
    if (label == "inf") {
      curve["k0"] = "inf";
    } else {
      curve["k0"] = k0;
      curve["e0"] = 0.5 * k0 * k0;
    }
    curves.push_back(std::move(curve));
    out.curve_files.push_back(file);
  }
  nlohmann::json manifest = {{"figure", 1},
                             {"default_column", "abs_s2"},
                             {"x_column", "k"},
                             {"curves", std::move(curves)}};
  out.manifest = dir / "fig1_manifest.json";
  write_file_atomic(out.manifest, manifest.dump(2) + "\n");
  return out;
}

FigureOutput figure2(const std::filesystem::path& dir) {
  const std::vector<double> grid = linear_grid(-3.0, 3.0, 241);
  nlohmann::json curves = nlohmann::json::array();
  FigureOutput out;
  for (double mu : {0.5, 1.0, 1.5}) {
    for (bool infinite_e0 : {true, false}) {
      std::ostringstream name;
      name << "fig2_mu" << mu << (infinite_e0 ? "_e0inf" : "_e01") << ".csv";
      const std::filesystem::path file = dir / name.str();
      const std::optional<double> e0 =
          infinite_e0 ? std::nullopt : std::optional<double>(1.0);
      emit_table(file, energy_sweep(mu, e0, grid));
      nlohmann::json curve = {{"file", file.filename().string()}, {"mu", mu}};
      if (infinite_e0) {
        curve["e0"] = "inf";
      } else {
        curve["e0"] = 1.0;
      }
      curves.push_back(std::move(curve));
      out.curve_files.push_back(file);
    }
  }
  nlohmann::json manifest = {{"figure", 2},
                             {"default_column", "E"},
                             {"x_column", "lambda0"},
                             {"curves", std::move(curves)}};
  out.manifest = dir / "fig2_manifest.json";
  write_file_atomic(out.manifest, manifest.dump(2) + "\n");
  return out;
}

FigureOutput wavefunction_figure(int index, const std::filesystem::path& dir,
                                 double mu, const std::vector<double>& e0_values,
                                 bool half_line_lambda) {
  const std::vector<double> xs = linear_grid(-10.0, 10.0, 801);
  nlohmann::json curves = nlohmann::json::array();
  FigureOutput out;
  for (double e0 : e0_values) {
    const bool infinite_e0 = !std::isfinite(e0);
    const double lambda0 = half_line_lambda
                               ? (infinite_e0 ? 1.0 : half_line_lambda0(mu, e0, +1))
                               : 2.0;
    const CouplingFunction f =
        infinite_e0 ? CouplingFunction::constant(lambda0)
                    : CouplingFunction::exponential_decay(lambda0, e0);
    const BoundState state = make_bound_state(mu, f);
    std::ostringstream name;
    name << "fig" << index << "_e0";
    if (infinite_e0) {
      name << "inf";
    } else {
      name << e0;
    }
    name << ".csv";
    const std::filesystem::path file = dir / name.str();
    emit_table(file, wavefunction_table(state, xs));
    nlohmann::json curve = {{"file", file.filename().string()},
                            {"mu", mu},
                            {"lambda0", lambda0},
                            {"E", state.energy},
                            {"kappa", state.kappa},
                            {"lambda_E", state.lambda_e}};
    if (infinite_e0) {
      curve["e0"] = "inf";
    } else {
      curve["e0"] = e0;
    }
    curves.push_back(std::move(curve));
    out.curve_files.push_back(file);
  }
  nlohmann::json manifest = {{"figure", index},
                             {"default_column", "psi"},
                             {"x_column", "x"},
                             {"curves", std::move(curves)}};
  out.manifest = dir / ("fig" + std::to_string(index) + "_manifest.json");
  write_file_atomic(out.manifest, manifest.dump(2) + "\n");
  return out;
}

}  // namespace

FigureOutput write_figure_data(int index, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const double inf = std::numeric_limits<double>::infinity();
  switch (index) {
    case 1:
      return figure1(out_dir);
    case 2:
      return figure2(out_dir);
    case 3:
      return wavefunction_figure(3, out_dir, 1.0, {inf, 4.0, 1.0, 0.25}, false);
    case 4:
      return wavefunction_figure(4, out_dir, 2.0, {inf, 2.0, 1.0, 0.5}, true);
    default:
      throw InvalidParams("figure index must be 1..4");
  }
}

}  // namespace delta1d
