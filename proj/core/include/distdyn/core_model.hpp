#pragma once

#include "distdyn/numeric.hpp"

namespace distdyn {

// Static single-period distribution algebra for a two-class economy
// (workers and capitalists). Everything here is a pure function of its
// arguments; currency units are arbitrary and every rate-valued operation
// is invariant under a common rescaling of all currency inputs.

// One period's stocks and flows.
struct EconomyState {
  double wage = 0.0;                // W, per period
  double worker_profit = 0.0;       // profit accruing to worker-owned capital
  double capitalist_profit = 0.0;   // profit accruing to capitalist-owned capital
  double worker_capital = 0.0;      // capital stock owned by workers
  double capitalist_capital = 0.0;  // capital stock owned by capitalists
  double investment = 0.0;          // I, per period

  double total_profit() const { return capitalist_profit + worker_profit; }
  double total_capital() const { return worker_capital + capitalist_capital; }

  // All fields must be finite and non-negative.
  void validate() const;
};

// The saving-behavior pair (worker s_w, capitalist s_c).
// s_c = 0 is rejected: every closed-form profit-rate expression divides by it.
struct Propensities {
  double worker = 0.0;      // s_w in [0, 1]
  double capitalist = 0.0;  // s_c in (0, 1]

  void validate() const;
};

struct SavingsBreakdown {
  double worker_saving = 0.0;      // S_w
  double capitalist_saving = 0.0;  // S_c

  double total() const { return worker_saving + capitalist_saving; }
};

// Per-class deviation from the economy-wide profit rate.
struct ProfitRateResidual {
  double worker = 0.0;      // P_w/K_w - P/K
  double capitalist = 0.0;  // P_c/K_c - P/K
};

// Implied propensity with a feasibility flag. A value above 1 means no
// admissible counterpart propensity exists; the raw value is reported
// unclamped so callers can inspect how far out of range it is.
struct ImpliedPropensity {
  double value = 0.0;
  bool feasible = true;
};

// Profit rate with a flag set when wage-financed worker saving exceeds
// investment and the implied profit turns negative.
struct KaldorRate {
  double value = 0.0;
  bool negative_profit = false;
};

// Class savings from class incomes: S_w = s_w*(P_w + W), S_c = s_c*P_c.
SavingsBreakdown savings(const EconomyState& state, const Propensities& props);

// Signed residual S_w/S - K_w/K; zero iff the workers' share of saving
// equals their share of capital. Requires S > 0 and K > 0.
double pasinetti_condition_residual(const EconomyState& state,
                                    const SavingsBreakdown& breakdown);

// Residuals (P_w/K_w - P/K, P_c/K_c - P/K); both zero iff the profit rate
// is uniform across classes. Requires both capital stocks positive.
ProfitRateResidual uniform_profit_rate_residual(const EconomyState& state);

// Profit rate P/K = (1/s_c)(I/K): independent of the worker propensity.
double pasinetti_profit_rate(double capitalist_propensity, double investment,
                             double capital);

// Alternate form P/K = (1/s_w) * (P_w/(W+P_w)) * (I/K).
// Undefined at P_w = 0; agrees with pasinetti_profit_rate whenever the
// propensities satisfy the implied constraint (see
// implied_capitalist_propensity).
double pasinetti_profit_rate_alt(double worker_propensity, double worker_profit,
                                 double wage, double investment, double capital);

// Profit rate when workers own no capital: P/K = (1/s_c)(I - s_w*W)/K.
KaldorRate kaldor_profit_rate(double capitalist_propensity,
                              double worker_propensity, double wage,
                              double investment, double capital);

// Same closure with s_w taken as zero; algebraically the same formula as
// pasinetti_profit_rate. Kept as a distinct named operation so tests can
// assert that the forms coincide.
double kaldor_profit_rate_classic(double capitalist_propensity,
                                  double investment, double capital);

// s_c = s_w * (1 + W/P_w): the capitalist propensity forced by requiring
// the two profit-rate forms to agree. Singular at P_w = 0 (the limit
// argument forces s_w -> 0 instead; see implied_worker_propensity).
ImpliedPropensity implied_capitalist_propensity(double worker_propensity,
                                                double wage,
                                                double worker_profit);

// Inverse of the constraint: s_w = s_c * P_w / (W + P_w). Total at
// P_w = 0 (returns 0) as long as W + P_w > 0.
double implied_worker_propensity(double capitalist_propensity, double wage,
                                 double worker_profit);

}  // namespace distdyn
