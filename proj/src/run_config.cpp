#include "delta1d/run_config.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include "delta1d/bound_state.hpp"
#include "delta1d/checks.hpp"
#include "delta1d/errors.hpp"
#include "delta1d/figures.hpp"
#include "delta1d/json_io.hpp"
#include "delta1d/sweep_table.hpp"

namespace delta1d {

namespace {

double require_number(const nlohmann::json& doc, const char* key, const char* where) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw InvalidParams(std::string(where) + ": missing numeric field '" + key + "'");
  }
  return doc[key].get<double>();
}

// "e0": number > 0, or "inf" for the constant-coupling limit.
std::optional<double> parse_e0(const nlohmann::json& doc) {
  if (!doc.contains("e0")) {
    throw InvalidParams("model: energy-dep needs 'e0' (number or \"inf\")");
  }
  if (doc["e0"].is_string()) {
    if (doc["e0"].get<std::string>() == "inf") return std::nullopt;
    throw InvalidParams("model: 'e0' string value must be \"inf\"");
  }
  if (!doc["e0"].is_number()) {
    throw InvalidParams("model: 'e0' must be a number or \"inf\"");
  }
  return doc["e0"].get<double>();
}

void emit(const SweepTable& table, const std::string& output, OutputFormat format) {
  std::ostringstream buf;
  if (format == OutputFormat::csv) {
    table.write_csv(buf);
  } else {
    table.write_json(buf);
  }
  if (output.empty()) {
    std::cout << buf.str();
  } else {
    write_file_atomic(output, buf.str());
  }
}

std::string derived_wavefunction_path(const std::string& output) {
  const std::filesystem::path p(output);
  std::filesystem::path q = p.parent_path() / p.stem();
  q += "_psi";
  q += p.extension();
  return q.string();
}

SweepTable single_state_table(const CouplingFunction& g, const CouplingFunction& f) {
  SweepTable table;
  table.columns = {"lambda0", "E", "kappa", "lambda_E", "A", "B", "norm_residual"};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SweepTable::Row row;
  try {
    const BoundState state = make_bound_state(g, f);
    row.values = {nan,     state.energy, state.kappa,
                  state.lambda_e, state.a, state.b,
                  norm_identity_residual(state, g, f)};
  } catch (const std::exception& e) {
    row.values = {nan, nan, nan, nan, nan, nan, nan};
    row.error = e.what();
  }
  table.rows.push_back(std::move(row));
  return table;
}

struct BoundFamily {
  double mu = 0.0;
  std::optional<double> e0;            // nullopt = constant-coupling family
  std::vector<double> default_grid;    // used when the command gives none
  bool sweepable = true;               // false: single solve with the stored couplings
  std::optional<CouplingFunction> g;   // general model only
  std::optional<CouplingFunction> f;   // non-sweepable models
};

BoundFamily bound_family(const ModelSpec& model) {
  struct Visitor {
    BoundFamily operator()(const PureDelta& m) const {
      return {m.mu, std::nullopt, {0.0}, true, {}, {}};
    }
    BoundFamily operator()(const ConstantDeltaPrime& m) const {
      return {m.mu, std::nullopt, {m.lambda}, true, {}, {}};
    }
    BoundFamily operator()(const EnergyDependent& m) const {
      if (const auto* exp =
              std::get_if<CouplingFunction::ExponentialDecay>(&m.f.shape())) {
        return {m.mu, exp->e0, {exp->lambda0}, true, {}, {}};
      }
      if (const auto* con = std::get_if<CouplingFunction::Constant>(&m.f.shape())) {
        return {m.mu, std::nullopt, {con->value}, true, {}, {}};
      }
      return {m.mu, std::nullopt, {}, false, {}, m.f};  // series coupling
    }
    BoundFamily operator()(const General& m) const {
      return {0.0, std::nullopt, {}, false, m.g, m.f};
    }
  };
  return std::visit(Visitor{}, model);
}

int run_scatter(const RunConfig& cfg, const ScatterCommand& cmd) {
  std::vector<double> grid = cmd.explicit_grid;
  if (grid.empty()) {
    if (!(cmd.kmin < cmd.kmax)) throw InvalidParams("scatter: kmin must be < kmax");
    if (cmd.points < 2) throw InvalidParams("scatter: points must be >= 2");
    if (!(cmd.kmin > 0.0)) throw InvalidParams("scatter: kmin must be positive");
    grid = cmd.log_spaced ? log_grid(cmd.kmin, cmd.kmax, cmd.points)
                          : linear_grid(cmd.kmin, cmd.kmax, cmd.points);
  }
  const SweepTable table = transmission_sweep(cfg.model, grid);
  emit(table, cfg.output, cfg.format);
  return table.any_flagged() ? 1 : 0;
}

int run_bound(const RunConfig& cfg, const BoundCommand& cmd) {
  const BoundFamily family = bound_family(cfg.model);
  SweepTable table;
  if (family.sweepable) {
    const std::vector<double>& grid =
        cmd.lambda0_grid.empty() ? family.default_grid : cmd.lambda0_grid;
    table = energy_sweep(family.mu, family.e0, grid);
  } else if (family.g) {
    table = single_state_table(*family.g, *family.f);
  } else {
    table = single_state_table(CouplingFunction::constant(family.mu), *family.f);
  }
  emit(table, cfg.output, cfg.format);

  if (cmd.sample_x) {
    if (table.rows.size() != 1) {
      throw InvalidParams("bound: sample_x needs a single lambda0, not a grid");
    }
    if (table.rows.front().flagged()) return 1;
    const auto& v = table.rows.front().values;
    const BoundState state = {v[1], v[2], v[3], v[4], v[5], v[2] * (1.0 + v[3] * v[3])};
    const GridSpec& gs = *cmd.sample_x;
    if (!(gs.min < gs.max) || gs.points < 2) {
      throw InvalidParams("bound: sample_x needs min < max and points >= 2");
    }
    SweepTable psi;
    psi.columns = {"x", "psi"};
    for (double x : linear_grid(gs.min, gs.max, gs.points)) {
      psi.rows.push_back({{x, wavefunction_eval(state, x)}, {}});
    }
    std::string psi_out = cmd.wavefunction_output;
    if (psi_out.empty()) {
      if (cfg.output.empty()) {
        throw InvalidParams("bound: sample_x needs an output file path");
      }
      psi_out = derived_wavefunction_path(cfg.output);
    }
    emit(psi, psi_out, cfg.format);
  }
  return table.any_flagged() ? 1 : 0;
}

int run_figure(const RunConfig& cfg, const FigureCommand& cmd) {
  if (cmd.index < 1 || cmd.index > 4) {
    throw InvalidParams("figure: index must be 1..4");
  }
  const std::filesystem::path dir = cfg.output.empty() ? "." : cfg.output;
  write_figure_data(cmd.index, dir);
  return 0;
}

int run_check(const RunConfig& cfg, const CheckCommand& cmd) {
  CheckOptions options;
  options.seed = cmd.seed;
  options.draws = cmd.draws;
  options.inject_sign_flip_fault = cmd.inject_fault;
  const auto reports = run_check_suite(options);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& report : reports) arr.push_back(report_to_json(report));
  const std::string text = arr.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(cfg.output, text);
  }
  return all_passed(reports) ? 0 : 1;
}

}  // namespace

ModelSpec model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    throw InvalidParams("model: expected an object with a string 'type'");
  }
  const std::string type = doc["type"].get<std::string>();
  if (type == "delta") {
    return make_model(PureDelta{require_number(doc, "mu", "model")});
  }
  if (type == "gadella") {
    const double mu = require_number(doc, "mu", "model");
    const char* key = doc.contains("lambda") ? "lambda" : "lambda0";
    return make_model(ConstantDeltaPrime{mu, require_number(doc, key, "model")});
  }
  if (type == "energy-dep") {
    const double mu = require_number(doc, "mu", "model");
    if (doc.contains("f")) {
      return make_model(EnergyDependent{mu, coupling_from_json(doc["f"])});
    }
    const double lambda0 = require_number(doc, "lambda0", "model");
    const std::optional<double> e0 = parse_e0(doc);
    return make_model(EnergyDependent{
        mu, e0 ? CouplingFunction::exponential_decay(lambda0, *e0)
               : CouplingFunction::constant(lambda0)});
  }
  if (type == "general") {
    if (!doc.contains("g") || !doc.contains("f")) {
      throw InvalidParams("model: general needs 'g' and 'f' coupling objects");
    }
    return General{coupling_from_json(doc["g"]), coupling_from_json(doc["f"])};
  }
  throw InvalidParams("model: unknown type '" + type + "'");
}

RunConfig run_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidParams("config: expected a JSON object");
  RunConfig cfg;
  if (!doc.contains("command") || !doc["command"].is_object() ||
      !doc["command"].contains("type")) {
    throw InvalidParams("config: missing command object with a 'type'");
  }
  const nlohmann::json& cmd = doc["command"];
  const std::string type = cmd["type"].get<std::string>();

  if (type == "scatter" || type == "bound") {
    if (!doc.contains("model")) {
      throw InvalidParams("config: '" + type + "' needs a model");
    }
    cfg.model = model_from_json(doc["model"]);
  } else if (doc.contains("model")) {
    cfg.model = model_from_json(doc["model"]);
  }

  if (type == "scatter") {
    ScatterCommand sc;
    if (cmd.contains("k")) {
      if (!cmd["k"].is_array() || cmd["k"].empty()) {
        throw InvalidParams("scatter: 'k' must be a non-empty array");
      }
      for (const auto& v : cmd["k"]) sc.explicit_grid.push_back(v.get<double>());
    } else {
      sc.kmin = require_number(cmd, "kmin", "scatter");
      sc.kmax = require_number(cmd, "kmax", "scatter");
      sc.points = static_cast<int>(cmd.value("points", 100));
      sc.log_spaced = cmd.value("log", false);
      if (!(sc.kmin < sc.kmax)) throw InvalidParams("scatter: kmin must be < kmax");
      if (sc.points < 2) throw InvalidParams("scatter: points must be >= 2");
    }
    cfg.command = std::move(sc);
  } else if (type == "bound") {
    BoundCommand bc;
    if (cmd.contains("lambda0")) {
      if (cmd["lambda0"].is_array()) {
        for (const auto& v : cmd["lambda0"]) bc.lambda0_grid.push_back(v.get<double>());
      } else {
        bc.lambda0_grid.push_back(cmd["lambda0"].get<double>());
      }
    } else if (cmd.contains("lambda0_grid")) {
      const auto& g = cmd["lambda0_grid"];
      const int points = static_cast<int>(require_number(g, "points", "lambda0_grid"));
      bc.lambda0_grid = linear_grid(require_number(g, "min", "lambda0_grid"),
                                    require_number(g, "max", "lambda0_grid"), points);
    }
    if (cmd.contains("sample_x")) {
      const auto& s = cmd["sample_x"];
      bc.sample_x = GridSpec{require_number(s, "min", "sample_x"),
                             require_number(s, "max", "sample_x"),
                             static_cast<int>(require_number(s, "points", "sample_x"))};
    }
    bc.wavefunction_output = cmd.value("wavefunction_output", "");
    cfg.command = std::move(bc);
  } else if (type == "figure") {
    FigureCommand fc;
    fc.index = static_cast<int>(require_number(cmd, "index", "figure"));
    if (fc.index < 1 || fc.index > 4) throw InvalidParams("figure: index must be 1..4");
    cfg.command = fc;
  } else if (type == "check") {
    CheckCommand cc;
    cc.seed = static_cast<std::uint64_t>(cmd.value("seed", 20250801.0));
    cc.draws = static_cast<int>(cmd.value("draws", 400.0));
    cc.inject_fault = cmd.value("inject_fault", false);
    cfg.command = cc;
  } else {
    throw InvalidParams("config: unknown command type '" + type + "'");
  }

  cfg.output = doc.value("output", "");
  const std::string format = doc.value("format", "csv");
  if (format == "csv") {
    cfg.format = OutputFormat::csv;
  } else if (format == "json") {
    cfg.format = OutputFormat::json;
  } else {
    throw InvalidParams("config: format must be 'csv' or 'json'");
  }
  return cfg;
}

int execute(const RunConfig& cfg) {
  struct Visitor {
    const RunConfig& cfg;
    int operator()(const ScatterCommand& cmd) const { return run_scatter(cfg, cmd); }
    int operator()(const BoundCommand& cmd) const { return run_bound(cfg, cmd); }
    int operator()(const FigureCommand& cmd) const { return run_figure(cfg, cmd); }
    int operator()(const CheckCommand& cmd) const { return run_check(cfg, cmd); }
  };
  return std::visit(Visitor{cfg}, cfg.command);
}

}  // namespace delta1d
