#pragma once

#include <utility>
#include <vector>

#include "distdyn/contract.hpp"
#include "distdyn/core_model.hpp"

namespace distdyn {

// Discrete-time capital accumulation. Each period: incomes accrue on the
// capital in place at the start of the period under a uniform profit rate,
// full saving capacities form from class incomes, the contract restriction
// is optionally applied, and actual savings are fully invested (S = I) and
// added to the owning class's capital stock. Derivatives and integrals of
// the continuous formulation become unit-period forward differences and
// prefix sums.

enum class ClosureMode { unconstrained, contract };

// Exogenous per-period series: constant, geometric growth, or an explicit
// per-period list.
class SeriesSpec {
 public:
  enum class Kind { constant, geometric, list };

  SeriesSpec() : kind_(Kind::constant) {}

  static SeriesSpec constant(double value);
  static SeriesSpec geometric(double initial, double ratio);
  static SeriesSpec list(std::vector<double> values);

  Kind kind() const { return kind_; }
  double base() const { return value_; }
  double growth() const { return ratio_; }
  const std::vector<double>& values() const { return values_; }

  double at(int t) const;

  // Every value over periods 0..horizon-1 finite and >= 0 (or > 0 when
  // require_positive); explicit lists must have exactly `horizon` entries.
  void validate(int horizon, const char* name, bool require_positive) const;

 private:
  Kind kind_;
  double value_ = 0.0;
  double ratio_ = 1.0;
  std::vector<double> values_;
};

// Full specification of a simulation run.
struct ScenarioConfig {
  int horizon = 1;  // T >= 1
  double initial_worker_capital = 0.0;
  double initial_capitalist_capital = 0.0;
  SeriesSpec profit_rate_path;  // constant or per-period list
  SeriesSpec wage_path;         // constant, geometric, or per-period list
  Propensities propensities;
  ClosureMode mode = ClosureMode::unconstrained;
  double contract_ratio = 0.0;  // required iff mode == contract
  bool carryover = false;       // unsaved capacity re-enters next period's FCS

  void validate() const;  // throws ValidationError naming the offending field
};

// One simulated period. Capital stocks are end-of-period: they include the
// period's own saving, so the stock columns are the initial stocks plus
// inclusive prefix sums of actual savings. The capital in place while the
// period's income accrued is recoverable as capital - saving.
struct PeriodRecord {
  int t = 0;
  double worker_capital = 0.0;
  double capitalist_capital = 0.0;
  double capital = 0.0;
  double wage = 0.0;
  double worker_profit = 0.0;
  double capitalist_profit = 0.0;
  double profit = 0.0;
  double worker_capacity = 0.0;      // FCS_w, carry-over included
  double capitalist_capacity = 0.0;  // FCS_c, carry-over included
  double worker_saving = 0.0;
  double capitalist_saving = 0.0;
  double saving = 0.0;
  double worker_unsaved = 0.0;
  double capitalist_unsaved = 0.0;
  double unsaved = 0.0;
  double capital_share = 0.0;         // K_w/K (NaN when K = 0)
  double saving_share = 0.0;          // S_w/S (NaN when S = 0)
  double equilibrium_residual = 0.0;  // S_w/S - K_w/K, signed
};

struct Trajectory {
  std::vector<PeriodRecord> records;  // length T, t = 0..T-1
  double cumulative_unsaved = 0.0;    // sum of US(t)
};

// Savings family S_w = C*f(t), S_c = D*f(t): exactly the flows under which
// the workers' saving share equals their capital share at every horizon
// when stocks start from zero.
struct ProportionalSavingsSpec {
  double worker_flow = 0.0;      // C
  double capitalist_flow = 0.0;  // D
  SeriesSpec multiplier;         // f(t) > 0

  double total_flow() const { return worker_flow + capitalist_flow; }
  void validate() const;
};

struct ClassIncomes {
  double worker_profit = 0.0;
  double capitalist_profit = 0.0;
};

// P_w = r*K_w, P_c = r*K_c: a uniform profit rate by construction.
ClassIncomes incomes_from_capital(double worker_capital,
                                  double capitalist_capital,
                                  double profit_rate);

// FCS_w = s_w*(W + P_w), FCS_c = s_c*P_c: propensities applied to class
// incomes.
SavingsCapacity full_capacities(const Propensities& props, double wage,
                                double worker_profit,
                                double capitalist_profit);

// Unsaved capacity carried between periods. It is income withheld from
// investment, not capital, so it earns no profit while idle.
struct CarriedUnsaved {
  double worker = 0.0;
  double capitalist = 0.0;
};

struct StepResult {
  PeriodRecord record;
  CarriedUnsaved carried;
};

// Advance one period: the new period's opening stocks are the current
// record's closing stocks, incomes are recomputed, and when
// config.carryover is set the carried amounts join the new capacities.
// The returned carried amounts are the new period's unsaved capacities
// (zeroed when carryover is off).
StepResult step(const PeriodRecord& current, const ScenarioConfig& config,
                const CarriedUnsaved& carried);

Trajectory simulate(const ScenarioConfig& config);

// Savings set directly to the proportional family, bypassing incomes;
// wage/profit/unsaved columns are zero and capacities equal the flows.
Trajectory simulate_proportional(const ProportionalSavingsSpec& spec,
                                 int horizon, double initial_worker_capital,
                                 double initial_capitalist_capital);

// Per-period S_w/S - K_w/K. Throws DomainError naming the first period
// with non-positive total saving or capital.
std::vector<double> equilibrium_residual_series(const Trajectory& trajectory);

struct GrowthComparison {
  double unconstrained_terminal_capital = 0.0;
  double contract_terminal_capital = 0.0;
  double cumulative_unsaved = 0.0;          // of the contract run
  std::vector<double> unsaved_series;       // of the contract run
};

// Runs the same scenario with and without the contract restriction and
// reports terminal capital under each. The contract run can never end
// with more capital than the unconstrained run.
GrowthComparison compare_growth(const ScenarioConfig& config);

}  // namespace distdyn
