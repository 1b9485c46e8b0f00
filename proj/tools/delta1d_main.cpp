#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "delta1d/bound_state.hpp"
#include "delta1d/errors.hpp"
#include "delta1d/run_config.hpp"
#include "json.hpp"

namespace {

struct ModelFlags {
  std::string model = "delta";
  double mu = 1.0;
  double lambda0 = 0.0;
  std::string e0 = "inf";
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--model", flags.model, "delta | gadella | energy-dep | general")
      ->check(CLI::IsMember({"delta", "gadella", "energy-dep", "general"}));
  cmd->add_option("--mu", flags.mu, "delta-term coupling (mu > 0 except pure delta)");
  cmd->add_option("--lambda0", flags.lambda0,
                  "delta'-term coupling (lambda for gadella, lambda0 for energy-dep)");
  cmd->add_option("--e0", flags.e0, "decay energy E0 (> 0) or \"inf\"");
}

delta1d::ModelSpec model_from_flags(const ModelFlags& flags) {
  nlohmann::json doc;
  doc["type"] = flags.model;
  doc["mu"] = flags.mu;
  if (flags.model == "gadella") {
    doc["lambda"] = flags.lambda0;
  } else if (flags.model == "energy-dep") {
    doc["lambda0"] = flags.lambda0;
    if (flags.e0 == "inf") {
      doc["e0"] = "inf";
    } else {
      doc["e0"] = std::stod(flags.e0);
    }
  } else if (flags.model == "general") {
    throw delta1d::InvalidParams(
        "the general model needs coupling objects; use --config");
  }
  return delta1d::model_from_json(doc);
}

delta1d::OutputFormat parse_format(const std::string& format) {
  return format == "json" ? delta1d::OutputFormat::json : delta1d::OutputFormat::csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "delta1d: scattering coefficients and bound states of one-dimensional\n"
      "delta / delta-delta' point interactions, including energy-dependent\n"
      "delta' couplings that restore high-energy transparency"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "run a JSON config (see README)");

  ModelFlags scatter_model, bound_model;
  std::string out_path, format = "csv";

  auto* scatter = app.add_subcommand("scatter", "transmission/reflection sweep over k");
  double kmin = 0.1, kmax = 10.0;
  int points = 100;
  bool log_spaced = false;
  add_model_flags(scatter, scatter_model);
  scatter->add_option("--kmin", kmin, "lowest wavenumber (> 0)");
  scatter->add_option("--kmax", kmax, "highest wavenumber");
  scatter->add_option("--points", points, "grid size (>= 2)");
  scatter->add_flag("--log", log_spaced, "log-spaced grid");
  scatter->add_option("--out", out_path, "output path (default stdout)");
  scatter->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* bound = app.add_subcommand("bound", "bound-state energies and amplitudes");
  double l0min = 0.0, l0max = 0.0;
  int l0points = 0;
  double xmin = -10.0, xmax = 10.0;
  int xpoints = 0;
  std::string wf_out;
  add_model_flags(bound, bound_model);
  bound->add_option("--lambda0-min", l0min, "lambda0 sweep start");
  bound->add_option("--lambda0-max", l0max, "lambda0 sweep end");
  bound->add_option("--lambda0-points", l0points, "lambda0 sweep size");
  bound->add_option("--xmin", xmin, "wavefunction sample start");
  bound->add_option("--xmax", xmax, "wavefunction sample end");
  bound->add_option("--xpoints", xpoints, "wavefunction sample size (enables sampling)");
  bound->add_option("--wf-out", wf_out, "wavefunction CSV path");
  bound->add_option("--out", out_path, "output path (default stdout)");
  bound->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* figure = app.add_subcommand("figure", "emit plot-ready curve data");
  int figure_index = 1;
  figure->add_option("--figure", figure_index, "figure index 1..4")->required();
  figure->add_option("--out", out_path, "output directory (default .)");

  auto* check = app.add_subcommand("check", "run the numerical self-check suite");
  std::uint64_t seed = 20250801;
  int draws = 400;
  bool inject_fault = false;
  check->add_option("--seed", seed, "RNG seed for the randomized checks");
  check->add_option("--draws", draws, "draws per randomized check");
  check->add_flag("--inject-fault", inject_fault,
                  "flip a matrix entry sign; the unitarity check must fail");
  check->add_option("--out", out_path, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    delta1d::RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot open config " << config_path << "\n";
        return 2;
      }
      nlohmann::json doc = nlohmann::json::parse(in);
      cfg = delta1d::run_config_from_json(doc);
    } else if (scatter->parsed()) {
      cfg.model = model_from_flags(scatter_model);
      cfg.command = delta1d::ScatterCommand{kmin, kmax, points, log_spaced, {}};
      cfg.output = out_path;
      cfg.format = parse_format(format);
    } else if (bound->parsed()) {
      cfg.model = model_from_flags(bound_model);
      delta1d::BoundCommand bc;
      if (l0points > 0) {
        if (!(l0min < l0max)) {
          std::cerr << "error: --lambda0-min must be below --lambda0-max\n";
          return 2;
        }
        for (int i = 0; i < l0points; ++i) {
          bc.lambda0_grid.push_back(
              l0points == 1 ? l0min : l0min + (l0max - l0min) * i / (l0points - 1));
        }
      } else if (bound->count("--lambda0") > 0) {
        bc.lambda0_grid.push_back(bound_model.lambda0);
      }
      if (xpoints > 0) {
        bc.sample_x = delta1d::GridSpec{xmin, xmax, xpoints};
        bc.wavefunction_output = wf_out;
      }
      cfg.command = std::move(bc);
      cfg.output = out_path;
      cfg.format = parse_format(format);
    } else if (figure->parsed()) {
      cfg.command = delta1d::FigureCommand{figure_index};
      cfg.output = out_path;
    } else if (check->parsed()) {
      cfg.command = delta1d::CheckCommand{seed, draws, inject_fault};
      cfg.output = out_path;
    } else {
      std::cerr << app.help();
      return 2;
    }
    return delta1d::execute(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
