#include "distdyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace distdyn {

SeriesSpec SeriesSpec::constant(double value) {
  SeriesSpec s;
  s.kind_ = Kind::constant;
  s.value_ = value;
  return s;
}

SeriesSpec SeriesSpec::geometric(double initial, double ratio) {
  SeriesSpec s;
  s.kind_ = Kind::geometric;
  s.value_ = initial;
  s.ratio_ = ratio;
  return s;
}

SeriesSpec SeriesSpec::list(std::vector<double> values) {
  SeriesSpec s;
  s.kind_ = Kind::list;
  s.values_ = std::move(values);
  return s;
}

double SeriesSpec::at(int t) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::geometric:
      return value_ * std::pow(ratio_, static_cast<double>(t));
    case Kind::list:
      if (t < 0 || static_cast<std::size_t>(t) >= values_.size())
        throw DomainError("series index " + std::to_string(t) + " out of range");
      return values_[static_cast<std::size_t>(t)];
  }
  throw DomainError("series kind corrupted");
}

void SeriesSpec::validate(int horizon, const char* name,
                          bool require_positive) const {
  const std::string label(name);
  auto check_value = [&](double v) {
    if (!std::isfinite(v))
      throw ValidationError(label + ": values must be finite");
    if (require_positive ? !(v > 0.0) : v < 0.0)
      throw ValidationError(label + (require_positive
                                         ? ": values must be strictly positive"
                                         : ": values must be non-negative"));
  };
  switch (kind_) {
    case Kind::constant:
      check_value(value_);
      return;
    case Kind::geometric:
      check_value(value_);
      if (!std::isfinite(ratio_) || !(ratio_ > 0.0))
        throw ValidationError(label + ": growth ratio must be strictly positive");
      return;
    case Kind::list:
      if (values_.size() != static_cast<std::size_t>(horizon))
        throw ValidationError(label + ": list length " +
                              std::to_string(values_.size()) +
                              " does not match horizon " +
                              std::to_string(horizon));
      for (double v : values_) check_value(v);
      return;
  }
}

void ScenarioConfig::validate() const {
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  if (!std::isfinite(initial_worker_capital) || initial_worker_capital < 0.0)
    throw ValidationError("initial_worker_capital must be finite and non-negative");
  if (!std::isfinite(initial_capitalist_capital) || initial_capitalist_capital < 0.0)
    throw ValidationError("initial_capitalist_capital must be finite and non-negative");
  if (profit_rate_path.kind() == SeriesSpec::Kind::geometric)
    throw ValidationError("profit_rate: kind must be constant or list");
  profit_rate_path.validate(horizon, "profit_rate", /*require_positive=*/false);
  wage_path.validate(horizon, "wage", /*require_positive=*/false);
  try {
    propensities.validate();
  } catch (const DomainError& e) {
    throw ValidationError(std::string("propensities: ") + e.what());
  }
  if (mode == ClosureMode::contract) {
    if (!std::isfinite(contract_ratio) || !(contract_ratio > 0.0))
      throw ValidationError("contract_ratio must be strictly positive in contract mode");
  }
}

void ProportionalSavingsSpec::validate() const {
  if (!std::isfinite(worker_flow) || worker_flow < 0.0)
    throw ValidationError("worker_flow must be finite and non-negative");
  if (!std::isfinite(capitalist_flow) || capitalist_flow < 0.0)
    throw ValidationError("capitalist_flow must be finite and non-negative");
}

ClassIncomes incomes_from_capital(double worker_capital,
                                  double capitalist_capital,
                                  double profit_rate) {
  require_nonnegative(worker_capital, "worker_capital");
  require_nonnegative(capitalist_capital, "capitalist_capital");
  require_nonnegative(profit_rate, "profit_rate");
  ClassIncomes out;
  out.worker_profit = profit_rate * worker_capital;
  out.capitalist_profit = profit_rate * capitalist_capital;
  return out;
}

SavingsCapacity full_capacities(const Propensities& props, double wage,
                                double worker_profit,
                                double capitalist_profit) {
  props.validate();
  require_nonnegative(wage, "wage");
  require_nonnegative(worker_profit, "worker_profit");
  require_nonnegative(capitalist_profit, "capitalist_profit");
  SavingsCapacity out;
  out.worker = props.worker * (wage + worker_profit);
  out.capitalist = props.capitalist * capitalist_profit;
  return out;
}

namespace {

// Build period t from its opening stocks. Closing stocks absorb the
// period's actual savings.
StepResult make_period(int t, double opening_worker_capital,
                       double opening_capitalist_capital,
                       const ScenarioConfig& config,
                       const CarriedUnsaved& carried_in) {
  const double rate = config.profit_rate_path.at(t);
  const double wage = config.wage_path.at(t);
  const ClassIncomes incomes = incomes_from_capital(
      opening_worker_capital, opening_capitalist_capital, rate);

  SavingsCapacity capacity =
      full_capacities(config.propensities, wage, incomes.worker_profit,
                      incomes.capitalist_profit);
  capacity.worker += carried_in.worker;
  capacity.capitalist += carried_in.capitalist;

  RestrictedSavings flows;
  if (config.mode == ClosureMode::contract) {
    flows = restrict(capacity, ContractRatio(config.contract_ratio));
  } else {
    flows.worker_actual = capacity.worker;
    flows.capitalist_actual = capacity.capitalist;
  }

  PeriodRecord rec;
  rec.t = t;
  rec.wage = wage;
  rec.worker_profit = incomes.worker_profit;
  rec.capitalist_profit = incomes.capitalist_profit;
  rec.profit = incomes.worker_profit + incomes.capitalist_profit;
  rec.worker_capacity = capacity.worker;
  rec.capitalist_capacity = capacity.capitalist;
  rec.worker_saving = flows.worker_actual;
  rec.capitalist_saving = flows.capitalist_actual;
  rec.saving = flows.total_actual();
  rec.worker_unsaved = flows.worker_unsaved;
  rec.capitalist_unsaved = flows.capitalist_unsaved;
  rec.unsaved = flows.total_unsaved();
  rec.worker_capital = opening_worker_capital + flows.worker_actual;
  rec.capitalist_capital = opening_capitalist_capital + flows.capitalist_actual;
  rec.capital = rec.worker_capital + rec.capitalist_capital;
  rec.capital_share = rec.worker_capital / rec.capital;
  rec.saving_share = rec.worker_saving / rec.saving;
  rec.equilibrium_residual = rec.saving_share - rec.capital_share;

  CarriedUnsaved carried_out;
  if (config.carryover) {
    carried_out.worker = flows.worker_unsaved;
    carried_out.capitalist = flows.capitalist_unsaved;
  }
  return {rec, carried_out};
}

}  // namespace

StepResult step(const PeriodRecord& current, const ScenarioConfig& config,
                const CarriedUnsaved& carried) {
  return make_period(current.t + 1, current.worker_capital,
                     current.capitalist_capital, config, carried);
}

Trajectory simulate(const ScenarioConfig& config) {
  config.validate();
  Trajectory traj;
  traj.records.reserve(static_cast<std::size_t>(config.horizon));
  CarriedUnsaved carried;
  double opening_worker = config.initial_worker_capital;
  double opening_capitalist = config.initial_capitalist_capital;
  for (int t = 0; t < config.horizon; ++t) {
    StepResult out = make_period(t, opening_worker, opening_capitalist, config, carried);
    carried = out.carried;
    opening_worker = out.record.worker_capital;
    opening_capitalist = out.record.capitalist_capital;
    traj.cumulative_unsaved += out.record.unsaved;
    traj.records.push_back(out.record);
  }
  return traj;
}

Trajectory simulate_proportional(const ProportionalSavingsSpec& spec,
                                 int horizon, double initial_worker_capital,
                                 double initial_capitalist_capital) {
  spec.validate();
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  if (!std::isfinite(initial_worker_capital) || initial_worker_capital < 0.0)
    throw ValidationError("initial_worker_capital must be finite and non-negative");
  if (!std::isfinite(initial_capitalist_capital) || initial_capitalist_capital < 0.0)
    throw ValidationError("initial_capitalist_capital must be finite and non-negative");
  spec.multiplier.validate(horizon, "multiplier", /*require_positive=*/true);

  Trajectory traj;
  traj.records.reserve(static_cast<std::size_t>(horizon));
  double worker_capital = initial_worker_capital;
  double capitalist_capital = initial_capitalist_capital;
  for (int t = 0; t < horizon; ++t) {
    const double scale = spec.multiplier.at(t);
    PeriodRecord rec;
    rec.t = t;
    rec.worker_saving = spec.worker_flow * scale;
    rec.capitalist_saving = spec.capitalist_flow * scale;
    rec.saving = rec.worker_saving + rec.capitalist_saving;
    rec.worker_capacity = rec.worker_saving;  // nothing restricted
    rec.capitalist_capacity = rec.capitalist_saving;
    worker_capital += rec.worker_saving;
    capitalist_capital += rec.capitalist_saving;
    rec.worker_capital = worker_capital;
    rec.capitalist_capital = capitalist_capital;
    rec.capital = worker_capital + capitalist_capital;
    rec.capital_share = rec.worker_capital / rec.capital;
    rec.saving_share = rec.worker_saving / rec.saving;
    rec.equilibrium_residual = rec.saving_share - rec.capital_share;
    traj.records.push_back(rec);
  }
  return traj;
}

std::vector<double> equilibrium_residual_series(const Trajectory& trajectory) {
  std::vector<double> out;
  out.reserve(trajectory.records.size());
  for (const PeriodRecord& rec : trajectory.records) {
    if (!(rec.saving > 0.0))
      throw DomainError("equilibrium residual undefined at t=" +
                        std::to_string(rec.t) + ": total saving is not positive");
    if (!(rec.capital > 0.0))
      throw DomainError("equilibrium residual undefined at t=" +
                        std::to_string(rec.t) + ": total capital is not positive");
    out.push_back(rec.equilibrium_residual);
  }
  return out;
}

GrowthComparison compare_growth(const ScenarioConfig& config) {
  if (config.mode != ClosureMode::contract)
    throw ValidationError("compare_growth requires a contract-mode scenario");
  ScenarioConfig unconstrained = config;
  unconstrained.mode = ClosureMode::unconstrained;

  const Trajectory base = simulate(unconstrained);
  const Trajectory restricted_run = simulate(config);

  GrowthComparison out;
  out.unconstrained_terminal_capital = base.records.back().capital;
  out.contract_terminal_capital = restricted_run.records.back().capital;
  out.cumulative_unsaved = restricted_run.cumulative_unsaved;
  out.unsaved_series.reserve(restricted_run.records.size());
  for (const PeriodRecord& rec : restricted_run.records)
    out.unsaved_series.push_back(rec.unsaved);

  if (out.contract_terminal_capital > out.unconstrained_terminal_capital)
    throw std::logic_error(
        "compare_growth: contract run ended with more capital than the "
        "unconstrained run");
  return out;
}

}  // namespace distdyn
