#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "distdyn/dynamics.hpp"

namespace distdyn {

inline constexpr int kScenarioSchemaVersion = 1;

// Column order is fixed; consumers may rely on it byte-for-byte.
extern const char* const kTrajectoryCsvHeader;

// A proportional-savings run target: the flow family plus the run frame.
struct ProportionalRun {
  ProportionalSavingsSpec spec;
  int horizon = 1;
  double initial_worker_capital = 0.0;
  double initial_capitalist_capital = 0.0;
};

using ParsedScenario = std::variant<ScenarioConfig, ProportionalRun>;

// Parse a UTF-8 JSON scenario document. Unknown keys are rejected at every
// level; exactly one of "scenario"/"proportional" must be present. Throws
// ValidationError with the offending field's path, or with line/column
// context for malformed JSON.
ParsedScenario parse_scenario(const std::string& text);

ParsedScenario load_scenario_file(const std::string& path);

Trajectory run_parsed(const ParsedScenario& parsed);

// CSV with the fixed header, one row per period, every value printed with
// 17 significant digits so doubles round-trip exactly. Output is fully
// deterministic: no timestamps, no locale dependence.
std::string trajectory_to_csv(const Trajectory& trajectory);

// Writes the CSV to the sink; returns bytes written.
std::size_t emit_trajectory(const Trajectory& trajectory, std::ostream& sink);

Trajectory parse_trajectory_csv(const std::string& text);

}  // namespace distdyn
