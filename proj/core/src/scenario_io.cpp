#include "distdyn/scenario_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace distdyn {

using nlohmann::json;

const char* const kTrajectoryCsvHeader =
    "t,K_w,K_c,K,W,P_w,P_c,P,FCS_w,FCS_c,S_w,S_c,S,US_w,US_c,US,"
    "ratio_K,ratio_S,equilibrium_residual";

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path.empty() ? message : path + ": " + message);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void expect_object(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected a JSON object");
}

void check_keys(const json& node, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) fail(path, "unknown key '" + it.key() + "'");
  }
}

const json& get_member(const json& node, const std::string& path,
                       const char* key) {
  auto it = node.find(key);
  if (it == node.end()) fail(path, std::string("missing required key '") + key + "'");
  return *it;
}

double get_number(const json& node, const std::string& path, const char* key) {
  const json& member = get_member(node, path, key);
  if (!member.is_number()) fail(join(path, key), "expected a number");
  return member.get<double>();
}

int get_integer(const json& node, const std::string& path, const char* key) {
  const json& member = get_member(node, path, key);
  if (!member.is_number_integer()) fail(join(path, key), "expected an integer");
  return member.get<int>();
}

SeriesSpec parse_series(const json& node, const std::string& path,
                        bool allow_geometric) {
  expect_object(node, path);
  const json& kind_node = get_member(node, path, "kind");
  if (!kind_node.is_string()) fail(join(path, "kind"), "expected a string");
  const std::string kind = kind_node.get<std::string>();
  if (kind == "constant") {
    check_keys(node, path, {"kind", "value"});
    return SeriesSpec::constant(get_number(node, path, "value"));
  }
  if (kind == "geometric") {
    if (!allow_geometric)
      fail(join(path, "kind"), "kind must be 'constant' or 'list'");
    check_keys(node, path, {"kind", "initial", "ratio"});
    return SeriesSpec::geometric(get_number(node, path, "initial"),
                                 get_number(node, path, "ratio"));
  }
  if (kind == "list") {
    check_keys(node, path, {"kind", "values"});
    const json& values_node = get_member(node, path, "values");
    if (!values_node.is_array()) fail(join(path, "values"), "expected an array");
    std::vector<double> values;
    values.reserve(values_node.size());
    for (const json& v : values_node) {
      if (!v.is_number()) fail(join(path, "values"), "expected numbers only");
      values.push_back(v.get<double>());
    }
    return SeriesSpec::list(std::move(values));
  }
  fail(join(path, "kind"), "unknown series kind '" + kind + "'");
}

Propensities parse_propensities(const json& node, const std::string& path) {
  expect_object(node, path);
  check_keys(node, path, {"workers", "capitalists"});
  Propensities props;
  props.worker = get_number(node, path, "workers");
  props.capitalist = get_number(node, path, "capitalists");
  return props;
}

struct InitialCapital {
  double workers = 0.0;
  double capitalists = 0.0;
};

InitialCapital parse_initial_capital(const json& node, const std::string& path) {
  expect_object(node, path);
  check_keys(node, path, {"workers", "capitalists"});
  InitialCapital out;
  out.workers = get_number(node, path, "workers");
  out.capitalists = get_number(node, path, "capitalists");
  return out;
}

ScenarioConfig parse_run_scenario(const json& node) {
  const std::string path = "scenario";
  expect_object(node, path);
  check_keys(node, path,
             {"horizon", "initial_capital", "profit_rate", "wage",
              "propensities", "mode", "contract_ratio", "carryover"});

  ScenarioConfig config;
  config.horizon = get_integer(node, path, "horizon");
  const InitialCapital initial =
      parse_initial_capital(get_member(node, path, "initial_capital"),
                            join(path, "initial_capital"));
  config.initial_worker_capital = initial.workers;
  config.initial_capitalist_capital = initial.capitalists;
  config.profit_rate_path = parse_series(get_member(node, path, "profit_rate"),
                                         join(path, "profit_rate"),
                                         /*allow_geometric=*/false);
  config.wage_path = parse_series(get_member(node, path, "wage"),
                                  join(path, "wage"), /*allow_geometric=*/true);
  config.propensities = parse_propensities(
      get_member(node, path, "propensities"), join(path, "propensities"));

  const json& mode_node = get_member(node, path, "mode");
  if (!mode_node.is_string()) fail(join(path, "mode"), "expected a string");
  const std::string mode = mode_node.get<std::string>();
  if (mode == "unconstrained") {
    config.mode = ClosureMode::unconstrained;
    if (node.contains("contract_ratio"))
      fail(join(path, "contract_ratio"),
           "only allowed when mode is 'contract'");
  } else if (mode == "contract") {
    config.mode = ClosureMode::contract;
    if (!node.contains("contract_ratio"))
      fail(join(path, "contract_ratio"), "required when mode is 'contract'");
    config.contract_ratio = get_number(node, path, "contract_ratio");
  } else {
    fail(join(path, "mode"), "must be 'unconstrained' or 'contract'");
  }

  if (node.contains("carryover")) {
    const json& carry = node["carryover"];
    if (!carry.is_boolean()) fail(join(path, "carryover"), "expected a boolean");
    config.carryover = carry.get<bool>();
  }

  try {
    config.validate();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return config;
}

ProportionalRun parse_proportional(const json& node) {
  const std::string path = "proportional";
  expect_object(node, path);
  check_keys(node, path,
             {"horizon", "initial_capital", "worker_flow", "capitalist_flow",
              "multiplier"});

  ProportionalRun run;
  run.horizon = get_integer(node, path, "horizon");
  const InitialCapital initial =
      parse_initial_capital(get_member(node, path, "initial_capital"),
                            join(path, "initial_capital"));
  run.initial_worker_capital = initial.workers;
  run.initial_capitalist_capital = initial.capitalists;
  run.spec.worker_flow = get_number(node, path, "worker_flow");
  run.spec.capitalist_flow = get_number(node, path, "capitalist_flow");
  run.spec.multiplier = parse_series(get_member(node, path, "multiplier"),
                                     join(path, "multiplier"),
                                     /*allow_geometric=*/true);

  try {
    run.spec.validate();
    if (run.horizon < 1) throw ValidationError("horizon must be at least 1");
    run.spec.multiplier.validate(run.horizon, "multiplier",
                                 /*require_positive=*/true);
    if (!(run.initial_worker_capital >= 0.0))
      throw ValidationError("initial_capital.workers must be non-negative");
    if (!(run.initial_capitalist_capital >= 0.0))
      throw ValidationError("initial_capital.capitalists must be non-negative");
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return run;
}

// Line/column of a byte offset, for parse-error context.
std::pair<std::size_t, std::size_t> line_of(const std::string& text,
                                            std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

ParsedScenario parse_scenario(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ValidationError("malformed JSON at line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ": " + e.what());
  }

  expect_object(document, "");
  check_keys(document, "", {"schema_version", "scenario", "proportional"});
  const int version = get_integer(document, "", "schema_version");
  if (version != kScenarioSchemaVersion)
    fail("schema_version", "unsupported version " + std::to_string(version) +
                               " (expected " +
                               std::to_string(kScenarioSchemaVersion) + ")");

  const bool has_scenario = document.contains("scenario");
  const bool has_proportional = document.contains("proportional");
  if (has_scenario == has_proportional)
    fail("", "exactly one of 'scenario' or 'proportional' must be present");

  if (has_scenario) return parse_run_scenario(document["scenario"]);
  return parse_proportional(document["proportional"]);
}

ParsedScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Trajectory run_parsed(const ParsedScenario& parsed) {
  if (const auto* config = std::get_if<ScenarioConfig>(&parsed))
    return simulate(*config);
  const auto& run = std::get<ProportionalRun>(parsed);
  return simulate_proportional(run.spec, run.horizon,
                               run.initial_worker_capital,
                               run.initial_capitalist_capital);
}

std::string trajectory_to_csv(const Trajectory& trajectory) {
  std::string out(kTrajectoryCsvHeader);
  out += '\n';
  for (const PeriodRecord& rec : trajectory.records) {
    out += std::to_string(rec.t);
    const double columns[] = {
        rec.worker_capital, rec.capitalist_capital, rec.capital,
        rec.wage,           rec.worker_profit,      rec.capitalist_profit,
        rec.profit,         rec.worker_capacity,    rec.capitalist_capacity,
        rec.worker_saving,  rec.capitalist_saving,  rec.saving,
        rec.worker_unsaved, rec.capitalist_unsaved, rec.unsaved,
        rec.capital_share,  rec.saving_share,       rec.equilibrium_residual};
    for (double value : columns) {
      out += ',';
      out += format_value(value);
    }
    out += '\n';
  }
  return out;
}

std::size_t emit_trajectory(const Trajectory& trajectory, std::ostream& sink) {
  const std::string csv = trajectory_to_csv(trajectory);
  sink.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  if (!sink) throw std::runtime_error("trajectory write failed");
  return csv.size();
}

Trajectory parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryCsvHeader)
    throw ValidationError("trajectory CSV: missing or unexpected header row");

  Trajectory traj;
  int expected_t = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    fields.reserve(19);
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      const std::string cell =
          line.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0')
        throw ValidationError("trajectory CSV: bad numeric cell '" + cell +
                              "' in row t=" + std::to_string(expected_t));
      fields.push_back(value);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 19)
      throw ValidationError("trajectory CSV: expected 19 columns, got " +
                            std::to_string(fields.size()));
    PeriodRecord rec;
    rec.t = static_cast<int>(fields[0]);
    if (rec.t != expected_t)
      throw ValidationError("trajectory CSV: period index " +
                            std::to_string(rec.t) + " out of order");
    rec.worker_capital = fields[1];
    rec.capitalist_capital = fields[2];
    rec.capital = fields[3];
    rec.wage = fields[4];
    rec.worker_profit = fields[5];
    rec.capitalist_profit = fields[6];
    rec.profit = fields[7];
    rec.worker_capacity = fields[8];
    rec.capitalist_capacity = fields[9];
    rec.worker_saving = fields[10];
    rec.capitalist_saving = fields[11];
    rec.saving = fields[12];
    rec.worker_unsaved = fields[13];
    rec.capitalist_unsaved = fields[14];
    rec.unsaved = fields[15];
    rec.capital_share = fields[16];
    rec.saving_share = fields[17];
    rec.equilibrium_residual = fields[18];
    traj.cumulative_unsaved += rec.unsaved;
    traj.records.push_back(rec);
    ++expected_t;
  }
  if (traj.records.empty())
    throw ValidationError("trajectory CSV: no data rows");
  return traj;
}

}  // namespace distdyn
