// distdyn: two-class distribution model simulator.
//
// Subcommands:
//   run      simulate a scenario file and write the trajectory CSV
//   compare  run a contract scenario with and without the restriction
//   verify   execute the identity/property suite (exit 1 on any failure)
//   appendix reproduce the worked restriction examples exactly
//
// Exit codes: 0 success, 1 verification/mismatch failure, 2 usage or
// parse error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "distdyn/contract.hpp"
#include "distdyn/dynamics.hpp"
#include "distdyn/scenario_io.hpp"
#include "distdyn/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_file(const std::string& path, const distdyn::Trajectory& trajectory) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw distdyn::ValidationError("cannot open output file: " + path);
  distdyn::emit_trajectory(trajectory, out);
}

int cmd_run(const std::string& scenario_path, const std::string& out_path) {
  const distdyn::ParsedScenario parsed = distdyn::load_scenario_file(scenario_path);
  const distdyn::Trajectory trajectory = distdyn::run_parsed(parsed);
  write_file(out_path, trajectory);
  std::printf("wrote %s (%zu periods)\n", out_path.c_str(), trajectory.records.size());
  return kExitSuccess;
}

int cmd_compare(const std::string& scenario_path, const std::string& out_prefix) {
  const distdyn::ParsedScenario parsed = distdyn::load_scenario_file(scenario_path);
  const auto* config = std::get_if<distdyn::ScenarioConfig>(&parsed);
  if (config == nullptr || config->mode != distdyn::ClosureMode::contract)
    throw distdyn::ValidationError("compare requires a contract-mode scenario");

  distdyn::ScenarioConfig unconstrained = *config;
  unconstrained.mode = distdyn::ClosureMode::unconstrained;
  write_file(out_prefix + "_unconstrained.csv", distdyn::simulate(unconstrained));
  write_file(out_prefix + "_contract.csv", distdyn::simulate(*config));

  const distdyn::GrowthComparison cmp = distdyn::compare_growth(*config);
  std::printf("K_unconstrained(T)=%s K_contract(T)=%s cumulative_US=%s\n",
              fmt(cmp.unconstrained_terminal_capital).c_str(),
              fmt(cmp.contract_terminal_capital).c_str(),
              fmt(cmp.cumulative_unsaved).c_str());
  return kExitSuccess;
}

int cmd_verify(const distdyn::VerifyOptions& options) {
  const std::vector<distdyn::CheckResult> results = distdyn::run_verification(options);
  bool all_passed = true;
  for (const distdyn::CheckResult& result : results) {
    std::printf("[%s] %s%s%s\n", result.passed ? "PASS" : "FAIL",
                result.name.c_str(), result.detail.empty() ? "" : ": ",
                result.detail.c_str());
    all_passed = all_passed && result.passed;
  }
  std::printf("%zu checks, seed=%llu, samples=%d, tol=%g\n", results.size(),
              static_cast<unsigned long long>(options.seed), options.samples,
              options.tolerance);
  return all_passed ? kExitSuccess : kExitCheckFailure;
}

struct AppendixCase {
  const char* label;
  double worker_capacity;
  double capitalist_capacity;
  double contract;
  double expected[4];  // S_w, S_c, US_w, US_c
};

int cmd_appendix() {
  const AppendixCase cases[] = {
      {"example 1", 5.0, 20.0, 1.0 / 5.0, {4.0, 20.0, 1.0, 0.0}},
      {"example 2", 4.0, 20.0, 1.0 / 4.0, {4.0, 16.0, 0.0, 4.0}},
  };
  bool all_match = true;
  for (const AppendixCase& c : cases) {
    const distdyn::SavingsCapacity capacity{c.worker_capacity, c.capitalist_capacity};
    const distdyn::RestrictedSavings r =
        distdyn::restrict(capacity, distdyn::ContractRatio(c.contract));
    const double computed[4] = {r.worker_actual, r.capitalist_actual,
                                r.worker_unsaved, r.capitalist_unsaved};
    bool match = true;
    for (int k = 0; k < 4; ++k) match = match && computed[k] == c.expected[k];
    std::printf("%s: FCS_w=%s FCS_c=%s R=%s\n", c.label,
                fmt(c.worker_capacity).c_str(), fmt(c.capitalist_capacity).c_str(),
                fmt(c.contract).c_str());
    std::printf("  computed: S_w=%s S_c=%s US_w=%s US_c=%s\n",
                fmt(computed[0]).c_str(), fmt(computed[1]).c_str(),
                fmt(computed[2]).c_str(), fmt(computed[3]).c_str());
    std::printf("  expected: S_w=%s S_c=%s US_w=%s US_c=%s -> %s\n",
                fmt(c.expected[0]).c_str(), fmt(c.expected[1]).c_str(),
                fmt(c.expected[2]).c_str(), fmt(c.expected[3]).c_str(),
                match ? "OK" : "MISMATCH");
    all_match = all_match && match;
  }
  return all_match ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-class distribution model simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string out_prefix;
  distdyn::VerifyOptions verify_options;

  CLI::App* run = app.add_subcommand("run", "Simulate a scenario and write the trajectory CSV");
  run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_path, "Output CSV path")->required();

  CLI::App* compare = app.add_subcommand(
      "compare", "Run a contract scenario with and without the restriction");
  compare->add_option("--scenario", scenario_path, "Scenario JSON file (contract mode)")
      ->required();
  compare->add_option("--out-prefix", out_prefix, "Prefix for the two output CSVs")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the identity/property suite");
  verify->add_option("--samples", verify_options.samples, "Samples per randomized check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_options.seed, "Seed for the randomized checks")
      ->envname("DISTDYN_SEED");
  verify->add_option("--tol", verify_options.tolerance, "Relative comparison tolerance")
      ->check(CLI::PositiveNumber);

  app.add_subcommand("appendix", "Reproduce the worked restriction examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(scenario_path, out_path);
    if (compare->parsed()) return cmd_compare(scenario_path, out_prefix);
    if (verify->parsed()) return cmd_verify(verify_options);
    return cmd_appendix();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
