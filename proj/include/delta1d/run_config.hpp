#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "delta1d/scattering.hpp"
#include "json.hpp"

namespace delta1d {

enum class OutputFormat { csv, json };

struct GridSpec {
  double min;
  double max;
  int points;
};

struct ScatterCommand {
  double kmin = 0.0;
  double kmax = 0.0;
  int points = 100;
  bool log_spaced = false;
  std::vector<double> explicit_grid;  // non-empty overrides kmin/kmax/points
};

struct BoundCommand {
  std::vector<double> lambda0_grid;      // empty = take it from the model
  std::optional<GridSpec> sample_x;      // when set, also emit the x,psi table
  std::string wavefunction_output;       // empty = derive from output path
};

struct FigureCommand {
  int index = 1;  // 1..4
};

struct CheckCommand {
  std::uint64_t seed = 20250801;
  int draws = 400;
  bool inject_fault = false;
};

/// A full CLI invocation: which model, which command, where the output goes.
struct RunConfig {
  ModelSpec model = PureDelta{1.0};
  std::variant<ScatterCommand, BoundCommand, FigureCommand, CheckCommand> command =
      CheckCommand{};
  std::string output;  // empty = stdout; figure commands require a directory
  OutputFormat format = OutputFormat::csv;
};

/// Parses the documented JSON schema; throws InvalidParams on anything
/// malformed (unknown model/command types, kmin >= kmax, points < 2,
/// figure index outside 1..4).
RunConfig run_config_from_json(const nlohmann::json& doc);

ModelSpec model_from_json(const nlohmann::json& doc);

/// Executes the configured command, writing tables/reports to cfg.output
/// (or stdout). Returns the process exit code: 0 clean, 1 when any sweep row
/// was error-flagged or any check failed.
int execute(const RunConfig& cfg);

}  // namespace delta1d
