#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esdqec/sweep.hpp"
#include "esdqec/version.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <numbers>
#include <sstream>

using namespace esdqec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("code names round-trip") {
  for (CodeKind code : {CodeKind::none, CodeKind::local41, CodeKind::nonlocal62})
    CHECK(code_from_string(to_string(code)) == code);
  CHECK_THROWS_AS(code_from_string("steane"), std::invalid_argument);
}

TEST_CASE("config validation names the offending field") {
  SweepConfig config;
  config.alpha = kPi / 4.0;
  CHECK_NOTHROW(validate(config));

  SweepConfig bad = config;
  bad.alpha = std::nan("");
  CHECK_THROWS_WITH_AS(validate(bad), "invalid config field: alpha", std::invalid_argument);

  bad = config;
  bad.gamma_min = -0.1;
  CHECK_THROWS_WITH_AS(validate(bad), "invalid config field: gamma_min", std::invalid_argument);

  bad = config;
  bad.gamma_max = 1.5;
  CHECK_THROWS_WITH_AS(validate(bad), "invalid config field: gamma_max", std::invalid_argument);

  bad = config;
  bad.gamma_min = 0.8;
  bad.gamma_max = 0.2;
  CHECK_THROWS_WITH_AS(validate(bad), "invalid config field: gamma_min exceeds gamma_max",
                       std::invalid_argument);

  bad = config;
  bad.gamma_steps = 0;
  CHECK_THROWS_WITH_AS(validate(bad), "invalid config field: gamma_steps", std::invalid_argument);
}

TEST_CASE("gamma grid endpoints are exact") {
  SweepConfig config;
  config.alpha = 0.5;
  config.gamma_min = 0.125;
  config.gamma_max = 0.875;
  config.gamma_steps = 7;
  const std::vector<double> grid = gamma_grid(config);
  REQUIRE(grid.size() == 7);
  CHECK(grid.front() == 0.125);
  CHECK(grid.back() == 0.875);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

  config.gamma_steps = 1;
  config.gamma_min = config.gamma_max = 0.5;
  CHECK(gamma_grid(config) == std::vector<double>{0.5});
}

TEST_CASE("uncoded psi sweep reproduces the linear law") {
  SweepConfig config;
  config.family = Family::psi;
  config.alpha = 0.9;
  config.beta = 0.3;
  config.gamma_steps = 11;
  const SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 11);
  CHECK(result.tool_version == kToolVersion);
  for (const SweepRow& row : result.rows) {
    CHECK(std::abs(row.fidelity - (1.0 - row.gamma)) < 1e-14);
    CHECK(row.concurrence >= 0.0);
    CHECK(row.concurrence <= 1.0);
  }
}

TEST_CASE("coded sweep starts lossless at gamma = 0") {
  SweepConfig config;
  config.alpha = kPi / 4.0;
  config.code = CodeKind::nonlocal62;
  config.gamma_max = 0.2;
  config.gamma_steps = 3;
  const SweepResult result = run_sweep(config);
  CHECK(result.rows.front().gamma == 0.0);
  CHECK(result.rows.front().fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.rows.front().concurrence == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("identical configs give bit-identical output") {
  SweepConfig config;
  config.family = Family::phi;
  config.alpha = kPi / 3.0;
  config.beta = 0.25;
  config.code = CodeKind::nonlocal62;
  config.gamma_steps = 21;

  std::ostringstream csv_a, csv_b, json_a, json_b;
  write_csv(run_sweep(config), csv_a);
  write_csv(run_sweep(config), csv_b);
  CHECK(csv_a.str() == csv_b.str());
  write_json(run_sweep(config), json_a);
  write_json(run_sweep(config), json_b);
  CHECK(json_a.str() == json_b.str());
}

TEST_CASE("CSV format: header and value round trip") {
  SweepConfig config;
  config.alpha = 1.0;
  config.gamma_steps = 5;
  const SweepResult result = run_sweep(config);
  std::ostringstream os;
  write_csv(result, os);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "gamma,fidelity,concurrence");
  std::size_t row = 0;
  while (std::getline(is, line)) {
    const std::size_t first = line.find(',');
    const std::size_t second = line.find(',', first + 1);
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    // 17 significant digits must survive a strtod round trip bit for bit.
    CHECK(std::strtod(line.substr(0, first).c_str(), nullptr) == result.rows[row].gamma);
    CHECK(std::strtod(line.substr(first + 1, second - first - 1).c_str(), nullptr) ==
          result.rows[row].fidelity);
    CHECK(std::strtod(line.substr(second + 1).c_str(), nullptr) == result.rows[row].concurrence);
    ++row;
  }
  CHECK(row == result.rows.size());
}

TEST_CASE("JSON output parses back with the config echo") {
  SweepConfig config;
  config.family = Family::zeta;
  config.alpha = 0.4;
  config.code = CodeKind::local41;
  config.gamma_max = 0.1;
  config.gamma_steps = 2;
  std::ostringstream os;
  write_json(run_sweep(config), os);
  const nlohmann::json doc = nlohmann::json::parse(os.str());
  CHECK(doc["config"]["family"] == "zeta");
  CHECK(doc["config"]["code"] == "local41");
  CHECK(doc["config"]["gamma_steps"] == 2);
  CHECK(doc["tool"]["name"] == "esdqec");
  CHECK(doc["tool"]["version"] == kToolVersion);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["gamma"] == 0.0);
  CHECK(doc["rows"][0].contains("fidelity"));
  CHECK(doc["rows"][0].contains("concurrence"));
}

TEST_CASE("full [6,2] sweep stays inside its time budget") {
  SweepConfig config;
  config.alpha = kPi / 4.0;
  config.code = CodeKind::nonlocal62;
  const auto start = std::chrono::steady_clock::now();
  const SweepResult result = run_sweep(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(result.rows.size() == 201);
  CHECK(seconds < 10.0);
  for (const SweepRow& row : result.rows) {
    CHECK(row.fidelity >= 0.0);
    CHECK(row.fidelity <= 1.0);
    CHECK(row.concurrence >= 0.0);
    CHECK(row.concurrence <= 1.0);
  }
}

TEST_CASE("full [4,1]x[4,1] sweep stays inside its time budget") {
  SweepConfig config;
  config.family = Family::psi;
  config.alpha = kPi / 4.0;
  config.code = CodeKind::local41;
  const auto start = std::chrono::steady_clock::now();
  const SweepResult result = run_sweep(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(result.rows.size() == 201);
  CHECK(seconds < 60.0);
  // Fidelity should start at 1, dip, and settle at the failure floor.
  CHECK(result.rows.front().fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.rows.back().fidelity < 0.8);
}
