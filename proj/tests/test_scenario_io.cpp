#include "distdyn/scenario_io.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "distdyn/rng.hpp"
#include "doctest.h"

using namespace distdyn;

namespace {

const char* kMinimalScenario = R"({
  "schema_version": 1,
  "scenario": {
    "horizon": 1,
    "initial_capital": {"workers": 0.0, "capitalists": 100.0},
    "profit_rate": {"kind": "constant", "value": 0.05},
    "wage": {"kind": "constant", "value": 30.0},
    "propensities": {"workers": 0.1, "capitalists": 0.5},
    "mode": "unconstrained"
  }
})";

std::string contract_scenario(const char* extra = "") {
  std::string text = R"({
  "schema_version": 1,
  "scenario": {
    "horizon": 50,
    "initial_capital": {"workers": 100.0, "capitalists": 1000.0},
    "profit_rate": {"kind": "constant", "value": 0.05},
    "wage": {"kind": "constant", "value": 100.0},
    "propensities": {"workers": 0.05, "capitalists": 0.5},
    "mode": "contract",
    "contract_ratio": 0.2,
    "carryover": true)";
  text += extra;
  text += "\n  }\n}";
  return text;
}

bool fields_match(const PeriodRecord& a, const PeriodRecord& b) {
  const double pairs[][2] = {
      {a.worker_capital, b.worker_capital},
      {a.capitalist_capital, b.capitalist_capital},
      {a.capital, b.capital},
      {a.wage, b.wage},
      {a.worker_profit, b.worker_profit},
      {a.capitalist_profit, b.capitalist_profit},
      {a.profit, b.profit},
      {a.worker_capacity, b.worker_capacity},
      {a.capitalist_capacity, b.capitalist_capacity},
      {a.worker_saving, b.worker_saving},
      {a.capitalist_saving, b.capitalist_saving},
      {a.saving, b.saving},
      {a.worker_unsaved, b.worker_unsaved},
      {a.capitalist_unsaved, b.capitalist_unsaved},
      {a.unsaved, b.unsaved},
      {a.capital_share, b.capital_share},
      {a.saving_share, b.saving_share},
      {a.equilibrium_residual, b.equilibrium_residual}};
  if (a.t != b.t) return false;
  for (const auto& [x, y] : pairs) {
    if (std::isnan(x) && std::isnan(y)) continue;
    if (!nearly_equal(x, y, 1e-15)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("minimal scenario parses") {
  const ParsedScenario parsed = parse_scenario(kMinimalScenario);
  const auto& config = std::get<ScenarioConfig>(parsed);
  CHECK(config.horizon == 1);
  CHECK(config.initial_capitalist_capital == 100.0);
  CHECK(config.mode == ClosureMode::unconstrained);
  CHECK_FALSE(config.carryover);
  CHECK(run_parsed(parsed).records.size() == 1);
}

TEST_CASE("contract scenario parses") {
  const ParsedScenario parsed = parse_scenario(contract_scenario());
  const auto& config = std::get<ScenarioConfig>(parsed);
  CHECK(config.mode == ClosureMode::contract);
  CHECK(config.contract_ratio == 0.2);
  CHECK(config.carryover);
}

TEST_CASE("proportional scenario parses") {
  const char* text = R"({
    "schema_version": 1,
    "proportional": {
      "horizon": 200,
      "initial_capital": {"workers": 0.0, "capitalists": 0.0},
      "worker_flow": 1.0,
      "capitalist_flow": 4.0,
      "multiplier": {"kind": "geometric", "initial": 1.0, "ratio": 1.05}
    }
  })";
  const ParsedScenario parsed = parse_scenario(text);
  const auto& run = std::get<ProportionalRun>(parsed);
  CHECK(run.horizon == 200);
  CHECK(run.spec.worker_flow == 1.0);
  const Trajectory traj = run_parsed(parsed);
  CHECK(traj.records.size() == 200);
}

TEST_CASE("parse errors name the offending field") {
  // Negative wage.
  std::string bad = kMinimalScenario;
  bad.replace(bad.find("30.0"), 4, "-3.0");
  CHECK_THROWS_WITH_AS(parse_scenario(bad),
                       "scenario: wage: values must be non-negative",
                       ValidationError);

  // Contract mode without the ratio.
  std::string no_ratio = kMinimalScenario;
  no_ratio.replace(no_ratio.find("unconstrained"), 13, "contract");
  CHECK_THROWS_WITH_AS(parse_scenario(no_ratio),
                       "scenario.contract_ratio: required when mode is 'contract'",
                       ValidationError);

  // The ratio is rejected outside contract mode.
  CHECK_THROWS_AS(parse_scenario(std::string(kMinimalScenario)
                                     .insert(std::string(kMinimalScenario).find("\"mode\""),
                                             "\"contract_ratio\": 0.2,\n    ")),
                  ValidationError);

  // Unknown keys are rejected.
  CHECK_THROWS_WITH_AS(parse_scenario(contract_scenario(",\n    \"surprise\": 1")),
                       "scenario: unknown key 'surprise'", ValidationError);

  // Geometric profit rates are not a thing.
  std::string geometric_rate = kMinimalScenario;
  geometric_rate.replace(
      geometric_rate.find("{\"kind\": \"constant\", \"value\": 0.05}"), 36,
      "{\"kind\": \"geometric\", \"initial\": 0.05, \"ratio\": 1.01}");
  CHECK_THROWS_WITH_AS(parse_scenario(geometric_rate),
                       "scenario.profit_rate.kind: kind must be 'constant' or 'list'",
                       ValidationError);
}

TEST_CASE("document-level structure is enforced") {
  CHECK_THROWS_AS(parse_scenario("{}"), ValidationError);
  CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 2, "scenario": {}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario(R"({"schema_version": 1})"), ValidationError);

  // Both run targets at once.
  std::string both = R"({
    "schema_version": 1,
    "scenario": {},
    "proportional": {}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario(both),
                       "exactly one of 'scenario' or 'proportional' must be present",
                       ValidationError);

  // Malformed document: the error carries line context.
  try {
    parse_scenario("{\n  \"schema_version\": 1,\n  oops\n}");
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("list paths must match the horizon") {
  std::string text = R"({
    "schema_version": 1,
    "scenario": {
      "horizon": 3,
      "initial_capital": {"workers": 0.0, "capitalists": 10.0},
      "profit_rate": {"kind": "list", "values": [0.05, 0.05]},
      "wage": {"kind": "constant", "value": 30.0},
      "propensities": {"workers": 0.1, "capitalists": 0.5},
      "mode": "unconstrained"
    }
  })";
  CHECK_THROWS_AS(parse_scenario(text), ValidationError);
}

TEST_CASE("csv emission is fixed-format and deterministic") {
  const ParsedScenario parsed = parse_scenario(kMinimalScenario);
  const Trajectory traj = run_parsed(parsed);
  const std::string csv = trajectory_to_csv(traj);

  // Header plus one row for the single period.
  std::istringstream lines(csv);
  std::string header, row, extra;
  CHECK(static_cast<bool>(std::getline(lines, header)));
  CHECK(header == std::string(kTrajectoryCsvHeader));
  CHECK(static_cast<bool>(std::getline(lines, row)));
  CHECK_FALSE(static_cast<bool>(std::getline(lines, extra)));
  CHECK(row.substr(0, 2) == "0,");

  CHECK(trajectory_to_csv(traj) == csv);  // byte-identical re-emission

  std::ostringstream sink;
  CHECK(emit_trajectory(traj, sink) == csv.size());
  CHECK(sink.str() == csv);
}

TEST_CASE("csv round-trips every field") {
  Rng rng(24601);
  for (int i = 0; i < 20; ++i) {
    ScenarioConfig config;
    config.horizon = rng.uniform_int(1, 60);
    config.initial_worker_capital = rng.uniform01() < 0.2 ? 0.0 : rng.log_uniform(0.1, 1e4);
    config.initial_capitalist_capital = rng.log_uniform(0.1, 1e4);
    config.profit_rate_path = SeriesSpec::constant(rng.uniform(0.0, 0.2));
    config.wage_path = SeriesSpec::constant(rng.uniform(0.0, 200.0));
    config.propensities = Propensities{rng.uniform(0.0, 1.0), rng.uniform(0.01, 1.0)};
    if (rng.coin()) {
      config.mode = ClosureMode::contract;
      config.contract_ratio = rng.log_uniform(0.05, 20.0);
      config.carryover = rng.coin();
    }
    const Trajectory traj = simulate(config);
    const Trajectory back = parse_trajectory_csv(trajectory_to_csv(traj));
    REQUIRE(back.records.size() == traj.records.size());
    CHECK(nearly_equal(back.cumulative_unsaved, traj.cumulative_unsaved, 1e-15));
    for (std::size_t k = 0; k < traj.records.size(); ++k)
      CHECK(fields_match(traj.records[k], back.records[k]));
  }
}

TEST_CASE("csv parser rejects mangled input") {
  const Trajectory traj = run_parsed(parse_scenario(kMinimalScenario));
  std::string csv = trajectory_to_csv(traj);

  CHECK_THROWS_AS(parse_trajectory_csv("not,a,trajectory\n1,2,3\n"), ValidationError);
  CHECK_THROWS_AS(parse_trajectory_csv(std::string(kTrajectoryCsvHeader) + "\n"),
                  ValidationError);

  std::string truncated = csv.substr(0, csv.rfind(',')) ;
  CHECK_THROWS_AS(parse_trajectory_csv(truncated), ValidationError);

  std::string corrupted = csv;
  corrupted.replace(corrupted.find("\n0,") + 1, 1, "7");
  CHECK_THROWS_AS(parse_trajectory_csv(corrupted), ValidationError);
}

TEST_CASE("loading a missing file fails cleanly") {
  CHECK_THROWS_AS(load_scenario_file("definitely_not_here.json"), ValidationError);
}
