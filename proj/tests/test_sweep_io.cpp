#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "delta1d/errors.hpp"
#include "delta1d/json_io.hpp"
#include "delta1d/run_config.hpp"
#include "delta1d/sweep_table.hpp"
#include "doctest.h"

using namespace delta1d;

TEST_CASE("grids") {
  const auto lin = linear_grid(0.0, 1.0, 5);
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 1.0);
  CHECK(lin[2] == doctest::Approx(0.5));

  const auto lg = log_grid(1e-2, 1e2, 5);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == doctest::Approx(1e-2).epsilon(1e-14));
  CHECK(lg.back() == 1e2);
  CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(linear_grid(3.0, 100.0, 1) == std::vector<double>{3.0});
  CHECK_THROWS_AS(linear_grid(1.0, 0.0, 5), InvalidParams);
  CHECK_THROWS_AS(log_grid(-1.0, 1.0, 5), InvalidParams);
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), InvalidParams);
}

TEST_CASE("csv emission is byte-stable and 17-digit") {
  SweepTable table;
  table.columns = {"k", "v"};
  table.rows.push_back({{1.0, 1.0 / 3.0}, {}});
  table.rows.push_back({{2.0, 0.1}, {}});

  std::ostringstream first, second;
  table.write_csv(first);
  table.write_csv(second);
  CHECK(first.str() == second.str());
  CHECK(first.str() ==
        "k,v\n1,0.33333333333333331\n2,0.10000000000000001\n");
}

TEST_CASE("flagged rows: nan in csv, error member in json") {
  SweepTable table;
  table.columns = {"k", "v"};
  table.rows.push_back({{1.0, 2.0}, {}});
  table.rows.push_back({{3.0, std::nan("")}, "boom"});
  CHECK(table.any_flagged());

  std::ostringstream csv;
  table.write_csv(csv);
  CHECK(csv.str().find("nan") != std::string::npos);

  std::ostringstream json_text;
  table.write_json(json_text);
  const auto doc = nlohmann::json::parse(json_text.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK_FALSE(doc[0].contains("error"));
  CHECK(doc[1]["error"] == "boom");
  CHECK(doc[1]["v"].is_null());
  CHECK(doc[0]["v"] == 2.0);
}

TEST_CASE("atomic writes leave no temp file behind") {
  const auto dir = std::filesystem::temp_directory_path() / "delta1d_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_file_atomic(path, "a,b\n1,2\n");
  CHECK(std::filesystem::exists(path));
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "a,b\n1,2\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("coupling construction from json") {
  CHECK(coupling_from_json({{"type", "constant"}, {"value", 2.5}})(7.0) == 2.5);

  const auto exp_coupling =
      coupling_from_json({{"type", "exp"}, {"lambda0", 2.0}, {"e0", 1.0}});
  CHECK(exp_coupling(0.5) == doctest::Approx(2.0 * std::exp(-0.5)));

  const auto inf_coupling =
      coupling_from_json({{"type", "exp"}, {"lambda0", 0.7}, {"e0", "inf"}});
  CHECK(inf_coupling.is_constant());
  CHECK(inf_coupling(123.0) == 0.7);

  const auto series =
      coupling_from_json({{"type", "series"}, {"coeffs", {1.0, 0.5}}});
  CHECK(series(2.0) == doctest::Approx(2.0));

  CHECK_THROWS_AS(coupling_from_json({{"type", "nope"}}), InvalidParams);
  CHECK_THROWS_AS(coupling_from_json({{"type", "exp"}, {"lambda0", 1.0}}),
                  InvalidParams);
  CHECK_THROWS_AS(coupling_from_json({{"type", "exp"}, {"lambda0", 1.0}, {"e0", -1.0}}),
                  InvalidParams);
  CHECK_THROWS_AS(
      coupling_from_json({{"type", "exp"}, {"lambda0", 1.0}, {"e0", "infinite"}}),
      InvalidParams);
  CHECK_THROWS_AS(coupling_from_json({{"type", "series"}, {"coeffs", nullptr}}),
                  InvalidParams);
}

TEST_CASE("run config parsing") {
  SUBCASE("scatter") {
    const auto cfg = run_config_from_json(
        {{"model", {{"type", "energy-dep"}, {"mu", 1.0}, {"lambda0", 1.0}, {"e0", 0.5}}},
         {"command",
          {{"type", "scatter"}, {"kmin", 0.01}, {"kmax", 100.0}, {"points", 50}, {"log", true}}},
         {"output", "x.csv"},
         {"format", "csv"}});
    const auto* sc = std::get_if<ScatterCommand>(&cfg.command);
    REQUIRE(sc != nullptr);
    CHECK(sc->kmin == 0.01);
    CHECK(sc->points == 50);
    CHECK(sc->log_spaced);
    CHECK(cfg.output == "x.csv");
    CHECK(std::holds_alternative<EnergyDependent>(cfg.model));
  }
  SUBCASE("scatter with an explicit k list") {
    const auto cfg = run_config_from_json(
        {{"model", {{"type", "delta"}, {"mu", 1.0}}},
         {"command", {{"type", "scatter"}, {"k", {1.0}}}}});
    const auto* sc = std::get_if<ScatterCommand>(&cfg.command);
    REQUIRE(sc != nullptr);
    CHECK(sc->explicit_grid == std::vector<double>{1.0});
  }
  SUBCASE("bound with grid and sampling") {
    const auto cfg = run_config_from_json(
        {{"model",
          {{"type", "energy-dep"}, {"mu", 2.0}, {"lambda0", 0.5}, {"e0", "inf"}}},
         {"command",
          {{"type", "bound"},
           {"lambda0", {0.0, 1.0, 2.0}},
           {"sample_x", {{"min", -5.0}, {"max", 5.0}, {"points", 11}}}}},
         {"output", "b.csv"}});
    const auto* bc = std::get_if<BoundCommand>(&cfg.command);
    REQUIRE(bc != nullptr);
    CHECK(bc->lambda0_grid.size() == 3);
    REQUIRE(bc->sample_x.has_value());
    CHECK(bc->sample_x->points == 11);
  }
  SUBCASE("general model from couplings") {
    const auto cfg = run_config_from_json(
        {{"model",
          {{"type", "general"},
           {"g", {{"type", "constant"}, {"value", 1.0}}},
           {"f", {{"type", "exp"}, {"lambda0", 1.0}, {"e0", 1.0}}}}},
         {"command", {{"type", "bound"}}}});
    CHECK(std::holds_alternative<General>(cfg.model));
  }
  SUBCASE("validation failures") {
    CHECK_THROWS_AS(run_config_from_json({{"command", {{"type", "figure"}, {"index", 5}}}}),
                    InvalidParams);
    CHECK_THROWS_AS(run_config_from_json({{"command", {{"type", "wat"}}}}),
                    InvalidParams);
    CHECK_THROWS_AS(
        run_config_from_json(
            {{"model", {{"type", "delta"}, {"mu", 1.0}}},
             {"command",
              {{"type", "scatter"}, {"kmin", 2.0}, {"kmax", 1.0}, {"points", 10}}}}),
        InvalidParams);
    CHECK_THROWS_AS(
        run_config_from_json(
            {{"model", {{"type", "delta"}, {"mu", 1.0}}},
             {"command",
              {{"type", "scatter"}, {"kmin", 1.0}, {"kmax", 2.0}, {"points", 1}}}}),
        InvalidParams);
    CHECK_THROWS_AS(
        run_config_from_json(
            {{"model", {{"type", "gadella"}, {"mu", -1.0}, {"lambda", 0.5}}},
             {"command", {{"type", "bound"}}}}),
        InvalidParams);
    CHECK_THROWS_AS(run_config_from_json({{"command", {{"type", "scatter"},
                                                       {"kmin", 1.0},
                                                       {"kmax", 2.0},
                                                       {"points", 10}}}}),
                    InvalidParams);  // scatter needs a model
  }
}

TEST_CASE("execute: scatter writes the pinned schema") {
  const auto dir = std::filesystem::temp_directory_path() / "delta1d_exec_test";
  std::filesystem::create_directories(dir);
  RunConfig cfg;
  cfg.model = PureDelta{1.0};
  cfg.command = ScatterCommand{0.0, 0.0, 0, false, {1.0}};
  cfg.output = (dir / "s.csv").string();
  CHECK(execute(cfg) == 0);
  std::ifstream in(dir / "s.csv");
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "k,re_r,im_r,re_s,im_s,abs_r2,abs_s2,unitarity_residual");
  CHECK(row.substr(0, 2) == "1,");
  std::filesystem::remove_all(dir);
}

TEST_CASE("execute: identical configs give identical bytes") {
  const auto dir = std::filesystem::temp_directory_path() / "delta1d_stable_test";
  std::filesystem::create_directories(dir);
  RunConfig cfg;
  cfg.model = EnergyDependent{1.0, CouplingFunction::exponential_decay(1.0, 0.5)};
  cfg.command = ScatterCommand{0.01, 100.0, 200, true, {}};
  cfg.output = (dir / "a.csv").string();
  CHECK(execute(cfg) == 0);
  cfg.output = (dir / "b.csv").string();
  CHECK(execute(cfg) == 0);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("execute: bound command with sampling") {
  const auto dir = std::filesystem::temp_directory_path() / "delta1d_bound_test";
  std::filesystem::create_directories(dir);
  RunConfig cfg;
  cfg.model = EnergyDependent{1.0, CouplingFunction::constant(2.0)};
  BoundCommand bc;
  bc.sample_x = GridSpec{-1.0, 1.0, 3};
  cfg.command = bc;
  cfg.output = (dir / "b.csv").string();
  CHECK(execute(cfg) == 0);
  CHECK(std::filesystem::exists(dir / "b.csv"));
  CHECK(std::filesystem::exists(dir / "b_psi.csv"));
  std::ifstream in(dir / "b.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "lambda0,E,kappa,lambda_E,A,B,norm_residual");
  std::ifstream psi_in(dir / "b_psi.csv");
  std::getline(psi_in, header);
  CHECK(header == "x,psi");
  std::string mid_row;
  std::getline(psi_in, mid_row);  // x = -1
  std::getline(psi_in, mid_row);  // x = 0 -> (A+B)/2 = 0.2
  CHECK(mid_row.substr(0, 2) == "0,");
  CHECK(std::stod(mid_row.substr(2)) == doctest::Approx(0.2).epsilon(1e-12));
  std::filesystem::remove_all(dir);
}

TEST_CASE("execute: general-model bound emits a nan lambda0 row") {
  RunConfig cfg;
  cfg.model = General{CouplingFunction::constant(1.0),
                      CouplingFunction::exponential_decay(0.5, 1.0)};
  cfg.command = BoundCommand{};
  const auto dir = std::filesystem::temp_directory_path() / "delta1d_gen_test";
  std::filesystem::create_directories(dir);
  cfg.output = (dir / "g.csv").string();
  CHECK(execute(cfg) == 0);
  std::ifstream in(dir / "g.csv");
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(row.substr(0, 4) == "nan,");
  std::filesystem::remove_all(dir);
}

TEST_CASE("report json shape") {
  const auto doc = report_to_json(ResidualReport::make("unit/x", 1e-13, 1e-12));
  CHECK(doc["context"] == "unit/x");
  CHECK(doc["passed"] == true);
  CHECK(doc["tolerance"] == 1e-12);
}
