#include "distdyn/core_model.hpp"

namespace distdyn {

void EconomyState::validate() const {
  require_nonnegative(wage, "EconomyState.wage");
  require_nonnegative(worker_profit, "EconomyState.worker_profit");
  require_nonnegative(capitalist_profit, "EconomyState.capitalist_profit");
  require_nonnegative(worker_capital, "EconomyState.worker_capital");
  require_nonnegative(capitalist_capital, "EconomyState.capitalist_capital");
  require_nonnegative(investment, "EconomyState.investment");
}

void Propensities::validate() const {
  require_finite(worker, "Propensities.worker");
  require_finite(capitalist, "Propensities.capitalist");
  if (worker < 0.0 || worker > 1.0)
    throw DomainError("Propensities.worker must lie in [0, 1]");
  if (!(capitalist > 0.0) || capitalist > 1.0)
    throw DomainError("Propensities.capitalist must lie in (0, 1]");
}

SavingsBreakdown savings(const EconomyState& state, const Propensities& props) {
  state.validate();
  props.validate();
  SavingsBreakdown out;
  out.worker_saving = props.worker * (state.worker_profit + state.wage);
  out.capitalist_saving = props.capitalist * state.capitalist_profit;
  return out;
}

double pasinetti_condition_residual(const EconomyState& state,
                                    const SavingsBreakdown& breakdown) {
  const double total_saving = breakdown.total();
  const double total_capital = state.total_capital();
  if (!(total_saving > 0.0))
    throw DomainError("pasinetti_condition_residual: total saving must be positive");
  if (!(total_capital > 0.0))
    throw DomainError("pasinetti_condition_residual: total capital must be positive");
  return breakdown.worker_saving / total_saving -
         state.worker_capital / total_capital;
}

ProfitRateResidual uniform_profit_rate_residual(const EconomyState& state) {
  state.validate();
  if (!(state.worker_capital > 0.0))
    throw DomainError("uniform_profit_rate_residual: worker capital must be positive");
  if (!(state.capitalist_capital > 0.0))
    throw DomainError("uniform_profit_rate_residual: capitalist capital must be positive");
  const double economy_rate = state.total_profit() / state.total_capital();
  ProfitRateResidual out;
  out.worker = state.worker_profit / state.worker_capital - economy_rate;
  out.capitalist = state.capitalist_profit / state.capitalist_capital - economy_rate;
  return out;
}

double pasinetti_profit_rate(double capitalist_propensity, double investment,
                             double capital) {
  require_positive(capitalist_propensity, "capitalist_propensity");
  require_nonnegative(investment, "investment");
  require_positive(capital, "capital");
  return investment / (capitalist_propensity * capital);
}

double pasinetti_profit_rate_alt(double worker_propensity, double worker_profit,
                                 double wage, double investment,
                                 double capital) {
  require_positive(worker_propensity, "worker_propensity");
  require_positive(worker_profit, "worker_profit");
  require_nonnegative(wage, "wage");
  require_nonnegative(investment, "investment");
  require_positive(capital, "capital");
  const double profit_share = worker_profit / (wage + worker_profit);
  return profit_share * (investment / (worker_propensity * capital));
}

KaldorRate kaldor_profit_rate(double capitalist_propensity,
                              double worker_propensity, double wage,
                              double investment, double capital) {
  require_positive(capitalist_propensity, "capitalist_propensity");
  require_nonnegative(worker_propensity, "worker_propensity");
  require_nonnegative(wage, "wage");
  require_nonnegative(investment, "investment");
  require_positive(capital, "capital");
  KaldorRate out;
  const double wage_saving = worker_propensity * wage;
  out.negative_profit = investment < wage_saving;
  out.value = (investment - wage_saving) / (capitalist_propensity * capital);
  return out;
}

double kaldor_profit_rate_classic(double capitalist_propensity,
                                  double investment, double capital) {
  require_positive(capitalist_propensity, "capitalist_propensity");
  require_nonnegative(investment, "investment");
  require_positive(capital, "capital");
  return investment / (capitalist_propensity * capital);
}

ImpliedPropensity implied_capitalist_propensity(double worker_propensity,
                                                double wage,
                                                double worker_profit) {
  require_finite(worker_propensity, "worker_propensity");
  if (worker_propensity < 0.0 || worker_propensity > 1.0)
    throw DomainError("worker_propensity must lie in [0, 1]");
  require_nonnegative(wage, "wage");
  require_finite(worker_profit, "worker_profit");
  if (!(worker_profit > 0.0))
    throw DomainError(
        "implied_capitalist_propensity is singular at zero worker profit; "
        "the limit forces the worker propensity to zero instead");
  ImpliedPropensity out;
  out.value = worker_propensity * (1.0 + wage / worker_profit);
  out.feasible = out.value <= 1.0;
  return out;
}

double implied_worker_propensity(double capitalist_propensity, double wage,
                                 double worker_profit) {
  require_finite(capitalist_propensity, "capitalist_propensity");
  if (!(capitalist_propensity > 0.0) || capitalist_propensity > 1.0)
    throw DomainError("capitalist_propensity must lie in (0, 1]");
  require_nonnegative(wage, "wage");
  require_nonnegative(worker_profit, "worker_profit");
  const double total_income = wage + worker_profit;
  if (!(total_income > 0.0))
    throw DomainError("implied_worker_propensity: worker income W + P_w must be positive");
  return capitalist_propensity * worker_profit / total_income;
}

}  // namespace distdyn
