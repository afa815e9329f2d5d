#include "distdyn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

#include "distdyn/contract.hpp"
#include "distdyn/core_model.hpp"
#include "distdyn/dynamics.hpp"
#include "distdyn/rng.hpp"
#include "distdyn/scenario_io.hpp"

namespace distdyn {

namespace {

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.3g", value);
  return buffer;
}

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

struct Checker {
  const VerifyOptions& opt;
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult result;
    result.name = name;
    try {
      result.detail = body();  // empty or a summary; throws on failure
      result.passed = true;
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
    }
    results.push_back(std::move(result));
  }
};

[[noreturn]] void check_failed(const std::string& message) {
  throw std::runtime_error(message);
}

void expect(bool condition, const std::string& message) {
  if (!condition) check_failed(message);
}

// Literal conditional-function formulas, kept as the independent route the
// closed-form implementation is checked against.
RestrictedSavings literal_restriction(const SavingsCapacity& cap, double contract) {
  const double r1 = cap.worker / cap.capitalist;
  const double m1 = std::max(r1 - contract, 0.0);
  const double m2 = std::max(contract - r1, 0.0);
  RestrictedSavings out;
  out.worker_actual = cap.worker - cap.capitalist * m1;
  out.capitalist_actual = cap.worker / (m2 + r1);
  out.worker_unsaved = cap.capitalist * m1;
  out.capitalist_unsaved = cap.capitalist * m2 / (m2 + r1);
  return out;
}

SavingsCapacity random_capacity(Rng& rng, bool allow_zero_worker = true) {
  SavingsCapacity cap;
  cap.worker = (allow_zero_worker && rng.uniform01() < 0.02)
                   ? 0.0
                   : rng.log_uniform(1e-4, 1e8);
  cap.capitalist = rng.log_uniform(1e-4, 1e8);
  return cap;
}

ScenarioConfig random_scenario(Rng& rng, ClosureMode mode) {
  ScenarioConfig config;
  config.horizon = rng.uniform_int(1, 100);
  config.initial_worker_capital = rng.uniform01() < 0.1 ? 0.0 : rng.log_uniform(1e-1, 1e4);
  config.initial_capitalist_capital = rng.log_uniform(1e-1, 1e4);
  config.profit_rate_path = SeriesSpec::constant(rng.uniform(0.0, 0.3));
  config.wage_path = SeriesSpec::constant(rng.uniform(0.0, 200.0));
  config.propensities.worker = rng.uniform(0.0, 1.0);
  config.propensities.capitalist = rng.uniform(1e-3, 1.0);
  config.mode = mode;
  if (mode == ClosureMode::contract) {
    config.contract_ratio = rng.log_uniform(0.05, 20.0);
    config.carryover = rng.coin();
  }
  return config;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  Checker checker{opt, {}};
  const double tol = opt.tolerance;

  checker.run("final-equation-equivalence", [&] {
    Rng rng(opt.seed ^ 0x01);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const double wage = rng.uniform(0.0, 1000.0);
      const double worker_profit = rng.log_uniform(1e-6, 1e4);
      const double worker_propensity = rng.uniform(1e-6, 1.0);
      const double investment = rng.log_uniform(1e-3, 1e6);
      const double capital = rng.log_uniform(1e-3, 1e9);
      const ImpliedPropensity implied =
          implied_capitalist_propensity(worker_propensity, wage, worker_profit);
      const double via_capitalist =
          pasinetti_profit_rate(implied.value, investment, capital);
      const double via_worker = pasinetti_profit_rate_alt(
          worker_propensity, worker_profit, wage, investment, capital);
      worst = std::max(worst, rel_diff(via_capitalist, via_worker));
      expect(nearly_equal(via_capitalist, via_worker, tol),
             "profit-rate forms diverge: " + fmt(via_capitalist) + " vs " +
                 fmt(via_worker));
    }
    return "max relative gap " + fmt(worst);
  });

  checker.run("implied-propensity-identity", [&] {
    Rng rng(opt.seed ^ 0x02);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const double wage = rng.uniform(0.0, 1000.0);
      const double worker_profit = rng.log_uniform(1e-6, 1e4);
      const double worker_propensity = rng.uniform(0.0, 1.0);
      // One implementation serves both algebraic arrangements of the
      // constraint, so repeated calls are bit-identical.
      const double first =
          implied_capitalist_propensity(worker_propensity, wage, worker_profit).value;
      const double second =
          implied_capitalist_propensity(worker_propensity, wage, worker_profit).value;
      expect(first == second, "implied propensity is not deterministic");
      // The two textual arrangements agree to tolerance (they can differ
      // in the last ulp, which is why a single implementation is used).
      const double rearranged =
          worker_propensity * ((wage + worker_profit) / worker_profit);
      worst = std::max(worst, rel_diff(first, rearranged));
      expect(nearly_equal(first, rearranged, tol),
             "constraint arrangements diverge: " + fmt(first) + " vs " +
                 fmt(rearranged));
    }
    return "arrangement gap at most " + fmt(worst);
  });

  checker.run("kaldor-reduction", [&] {
    Rng rng(opt.seed ^ 0x03);
    for (int i = 0; i < opt.samples; ++i) {
      const double capitalist_propensity = rng.uniform(1e-6, 1.0);
      const double wage = rng.uniform(0.0, 1000.0);
      const double investment = rng.log_uniform(1e-3, 1e6);
      const double capital = rng.log_uniform(1e-3, 1e9);
      const KaldorRate with_worker =
          kaldor_profit_rate(capitalist_propensity, 0.0, wage, investment, capital);
      const double classic =
          kaldor_profit_rate_classic(capitalist_propensity, investment, capital);
      expect(with_worker.value == classic && !with_worker.negative_profit,
             "zero worker propensity does not reduce to the classic form");
    }
    return "exact over " + std::to_string(opt.samples) + " samples";
  });

  checker.run("propensity-round-trip", [&] {
    Rng rng(opt.seed ^ 0x04);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const double capitalist_propensity = rng.uniform(1e-6, 1.0);
      const double wage = rng.uniform(0.0, 1000.0);
      const double worker_profit = rng.log_uniform(1e-6, 1e4);
      const double worker_propensity =
          implied_worker_propensity(capitalist_propensity, wage, worker_profit);
      const double back =
          implied_capitalist_propensity(worker_propensity, wage, worker_profit).value;
      worst = std::max(worst, rel_diff(back, capitalist_propensity));
      expect(nearly_equal(back, capitalist_propensity, tol),
             "round trip lost the propensity: " + fmt(capitalist_propensity) +
                 " -> " + fmt(back));
    }
    return "max relative gap " + fmt(worst);
  });

  checker.run("worker-propensity-limit", [&] {
    Rng rng(opt.seed ^ 0x05);
    for (int i = 0; i < opt.samples / 10 + 1; ++i) {
      const double capitalist_propensity = rng.uniform(1e-3, 1.0);
      const double wage = rng.log_uniform(1e-2, 1e4);
      double previous = -1.0;
      for (double worker_profit = 1e-9; worker_profit < 1e3; worker_profit *= 10.0) {
        const double implied = implied_worker_propensity(capitalist_propensity,
                                                         wage, worker_profit);
        expect(implied > previous,
               "implied worker propensity must increase with worker profit");
        previous = implied;
      }
      const double vanishing =
          implied_worker_propensity(capitalist_propensity, wage, wage * 1e-12);
      expect(vanishing < capitalist_propensity * 1e-11,
             "implied worker propensity does not vanish with worker profit");
    }
    return std::string();
  });

  checker.run("wage-propensity-inconsistency", [&] {
    Rng rng(opt.seed ^ 0x06);
    for (int i = 0; i < opt.samples / 10 + 1; ++i) {
      const double capitalist_propensity = rng.uniform(1e-3, 1.0);
      const double worker_profit = rng.log_uniform(1e-3, 1e3);
      double previous = 2.0;
      for (double wage = 1e-3; wage < 1e6; wage *= 10.0) {
        const double implied = implied_worker_propensity(capitalist_propensity,
                                                         wage, worker_profit);
        expect(implied < previous,
               "raising the wage must lower the implied worker propensity");
        previous = implied;
      }
    }
    return std::string();
  });

  checker.run("contract-ratio-enforcement", [&] {
    Rng rng(opt.seed ^ 0x07);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const SavingsCapacity cap = random_capacity(rng);
      const double contract = rng.log_uniform(1e-3, 1e3);
      const RestrictedSavings r = restrict(cap, ContractRatio(contract));
      if (r.capitalist_actual > 0.0) {
        const double realized = r.worker_actual / r.capitalist_actual;
        worst = std::max(worst, rel_diff(realized, contract));
        expect(nearly_equal(realized, contract, tol),
               "realized ratio " + fmt(realized) + " != contract " + fmt(contract));
      }
    }
    return "max relative gap " + fmt(worst);
  });

  checker.run("capacity-conservation", [&] {
    Rng rng(opt.seed ^ 0x08);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const SavingsCapacity cap = random_capacity(rng);
      const double contract = rng.log_uniform(1e-3, 1e3);
      const RestrictedSavings r = restrict(cap, ContractRatio(contract));
      worst = std::max(worst, rel_diff(r.worker_actual + r.worker_unsaved, cap.worker));
      worst = std::max(worst,
                       rel_diff(r.capitalist_actual + r.capitalist_unsaved, cap.capitalist));
      expect(nearly_equal(r.worker_actual + r.worker_unsaved, cap.worker, tol) &&
                 nearly_equal(r.capitalist_actual + r.capitalist_unsaved,
                              cap.capitalist, tol),
             "actual + unsaved does not reproduce the capacity");
      expect(r.worker_actual >= 0.0 && r.worker_actual <= cap.worker &&
                 r.capitalist_actual >= 0.0 && r.capitalist_actual <= cap.capitalist,
             "actual saving escapes [0, capacity]");
    }
    return "max relative gap " + fmt(worst);
  });

  checker.run("one-sided-restriction", [&] {
    Rng rng(opt.seed ^ 0x09);
    for (int i = 0; i < opt.samples; ++i) {
      const SavingsCapacity cap = random_capacity(rng);
      const double contract = rng.log_uniform(1e-3, 1e3);
      const RestrictedSavings r = restrict(cap, ContractRatio(contract));
      expect(r.worker_unsaved * r.capitalist_unsaved == 0.0,
             "both classes restricted at once");
      expect(r.worker_unsaved >= 0.0 && r.capitalist_unsaved >= 0.0,
             "negative unsaved capacity");
    }
    return std::string();
  });

  checker.run("unsaved-iff-ratio-gap", [&] {
    Rng rng(opt.seed ^ 0x0a);
    for (int i = 0; i < opt.samples; ++i) {
      SavingsCapacity cap = random_capacity(rng, /*allow_zero_worker=*/false);
      // Half the samples take the contract exactly at the capacity ratio.
      const bool matched = rng.coin();
      const double contract =
          matched ? capacity_ratio(cap) : rng.log_uniform(1e-3, 1e3);
      const RestrictedSavings r = restrict(cap, ContractRatio(contract));
      const double gap_free = r.total_unsaved();
      const bool ratios_match = nearly_equal(cap.worker / cap.capitalist, contract);
      expect(ratios_match == (gap_free == 0.0),
             "unsaved capacity must vanish exactly when the ratios agree");
    }
    return std::string();
  });

  checker.run("restriction-formula-equivalence", [&] {
    Rng rng(opt.seed ^ 0x0b);
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < opt.samples; ++i) {
      const SavingsCapacity cap = random_capacity(rng, /*allow_zero_worker=*/false);
      const double contract = rng.log_uniform(1e-3, 1e3);
      // Near the capacity ratio the implementation deliberately snaps to
      // the unrestricted outcome; the literal formulas are compared away
      // from that window.
      if (nearly_equal(cap.worker / cap.capitalist, contract, 1e-6)) continue;
      ++used;
      const RestrictedSavings closed = restrict(cap, ContractRatio(contract));
      const RestrictedSavings literal = literal_restriction(cap, contract);
      const double scale = std::max({1.0, cap.worker, cap.capitalist});
      const double pairs[][2] = {
          {closed.worker_actual, literal.worker_actual},
          {closed.capitalist_actual, literal.capitalist_actual},
          {closed.worker_unsaved, literal.worker_unsaved},
          {closed.capitalist_unsaved, literal.capitalist_unsaved}};
      for (const auto& [a, b] : pairs) {
        worst = std::max(worst, std::fabs(a - b) / scale);
        expect(std::fabs(a - b) <= tol * scale,
               "closed form and conditional-function formulas disagree");
      }
    }
    return std::to_string(used) + " samples compared, worst gap " + fmt(worst);
  });

  checker.run("restriction-scale-invariance", [&] {
    Rng rng(opt.seed ^ 0x0c);
    const double lambdas[] = {1e-6, 1e3, 1e9};
    for (int i = 0; i < opt.samples / 3 + 1; ++i) {
      const SavingsCapacity cap = random_capacity(rng);
      const double contract = rng.log_uniform(1e-3, 1e3);
      const RestrictedSavings base = restrict(cap, ContractRatio(contract));
      for (double lambda : lambdas) {
        const SavingsCapacity scaled{cap.worker * lambda, cap.capitalist * lambda};
        const RestrictedSavings r = restrict(scaled, ContractRatio(contract));
        expect(nearly_equal(r.worker_actual, base.worker_actual * lambda, tol) &&
                   nearly_equal(r.capitalist_actual, base.capitalist_actual * lambda, tol) &&
                   nearly_equal(r.worker_unsaved, base.worker_unsaved * lambda, tol) &&
                   nearly_equal(r.capitalist_unsaved, base.capitalist_unsaved * lambda, tol),
               "restriction is not homogeneous of degree one");
      }
    }
    return std::string();
  });

  checker.run("restriction-idempotence", [&] {
    Rng rng(opt.seed ^ 0x0d);
    for (int i = 0; i < opt.samples; ++i) {
      const SavingsCapacity cap = random_capacity(rng);
      const double contract = rng.log_uniform(1e-3, 1e3);
      const RestrictedSavings first = restrict(cap, ContractRatio(contract));
      const SavingsCapacity already{first.worker_actual, first.capitalist_actual};
      const RestrictedSavings second = restrict(already, ContractRatio(contract));
      expect(second.worker_actual == first.worker_actual &&
                 second.capitalist_actual == first.capitalist_actual &&
                 second.total_unsaved() == 0.0,
             "restricting the restricted pair changed it");
    }
    return std::string();
  });

  checker.run("static-scale-invariance", [&] {
    Rng rng(opt.seed ^ 0x0e);
    const double lambdas[] = {1e-6, 1e3, 1e9};
    for (int i = 0; i < opt.samples / 3 + 1; ++i) {
      EconomyState state;
      state.wage = rng.uniform(0.0, 1000.0);
      state.worker_profit = rng.log_uniform(1e-3, 1e3);
      state.capitalist_profit = rng.log_uniform(1e-3, 1e3);
      state.worker_capital = rng.log_uniform(1e-2, 1e6);
      state.capitalist_capital = rng.log_uniform(1e-2, 1e6);
      state.investment = rng.log_uniform(1e-3, 1e4);
      Propensities props;
      props.worker = rng.uniform(0.0, 1.0);
      props.capitalist = rng.uniform(1e-3, 1.0);

      const SavingsBreakdown flows = savings(state, props);
      const double residual = pasinetti_condition_residual(state, flows);
      const ProfitRateResidual rates = uniform_profit_rate_residual(state);
      const double closed = pasinetti_profit_rate(props.capitalist, state.investment,
                                                  state.total_capital());
      for (double lambda : lambdas) {
        EconomyState scaled = state;
        scaled.wage *= lambda;
        scaled.worker_profit *= lambda;
        scaled.capitalist_profit *= lambda;
        scaled.worker_capital *= lambda;
        scaled.capitalist_capital *= lambda;
        scaled.investment *= lambda;
        const SavingsBreakdown scaled_flows = savings(scaled, props);
        expect(nearly_equal(scaled_flows.worker_saving, flows.worker_saving * lambda, tol) &&
                   nearly_equal(scaled_flows.capitalist_saving,
                                flows.capitalist_saving * lambda, tol),
               "savings are not homogeneous of degree one");
        expect(nearly_equal(pasinetti_condition_residual(scaled, scaled_flows),
                            residual, tol),
               "condition residual is not scale invariant");
        const ProfitRateResidual scaled_rates = uniform_profit_rate_residual(scaled);
        expect(nearly_equal(scaled_rates.worker, rates.worker, tol) &&
                   nearly_equal(scaled_rates.capitalist, rates.capitalist, tol),
               "rate residuals are not scale invariant");
        expect(nearly_equal(pasinetti_profit_rate(props.capitalist, scaled.investment,
                                                  scaled.total_capital()),
                            closed, tol),
               "closed-form profit rate is not scale invariant");
      }
    }
    return std::string();
  });

  checker.run("proportional-equilibrium", [&] {
    Rng rng(opt.seed ^ 0x0f);
    const int horizon = 200;
    double worst = 0.0;
    const int runs = std::max(10, opt.samples / 100);
    for (int i = 0; i < runs; ++i) {
      ProportionalSavingsSpec spec;
      spec.worker_flow = rng.log_uniform(1e-3, 1e3);
      spec.capitalist_flow = rng.uniform01() < 0.1 ? 0.0 : rng.log_uniform(1e-3, 1e3);
      switch (rng.uniform_int(0, 2)) {
        case 0:
          spec.multiplier = SeriesSpec::constant(rng.log_uniform(1e-2, 1e2));
          break;
        case 1:
          spec.multiplier = SeriesSpec::geometric(rng.log_uniform(1e-2, 1e2),
                                                  rng.uniform(0.9, 1.1));
          break;
        default: {
          std::vector<double> values;
          values.reserve(horizon);
          for (int t = 0; t < horizon; ++t)
            values.push_back(rng.log_uniform(1e-2, 1e2));
          spec.multiplier = SeriesSpec::list(std::move(values));
        }
      }
      const Trajectory traj = simulate_proportional(spec, horizon, 0.0, 0.0);
      for (double residual : equilibrium_residual_series(traj)) {
        worst = std::max(worst, std::fabs(residual));
        expect(std::fabs(residual) < tol,
               "proportional flows left the condition residual at " + fmt(residual));
      }
    }
    return "max |residual| " + fmt(worst) + " over " + std::to_string(runs) + " runs";
  });

  checker.run("stock-flow-consistency", [&] {
    Rng rng(opt.seed ^ 0x10);
    for (int variant = 0; variant < 2; ++variant) {
      ScenarioConfig config = random_scenario(
          rng, variant == 0 ? ClosureMode::unconstrained : ClosureMode::contract);
      config.horizon = 10000;
      // Keep compounding representable over 10^4 periods.
      config.profit_rate_path = SeriesSpec::constant(rng.uniform(0.0, 0.04));
      const Trajectory traj = simulate(config);
      long double worker_sum = config.initial_worker_capital;
      long double capitalist_sum = config.initial_capitalist_capital;
      for (const PeriodRecord& rec : traj.records) {
        // Opening stocks equal initial stocks plus the strict prefix sum of
        // savings; closing stocks include the period's own saving.
        const double opening_worker = rec.worker_capital - rec.worker_saving;
        const double opening_capitalist = rec.capitalist_capital - rec.capitalist_saving;
        expect(nearly_equal(opening_worker, static_cast<double>(worker_sum), 1e-9) &&
                   nearly_equal(opening_capitalist,
                                static_cast<double>(capitalist_sum), 1e-9),
               "opening stocks drift from the prefix sums at t=" +
                   std::to_string(rec.t));
        worker_sum += rec.worker_saving;
        capitalist_sum += rec.capitalist_saving;
        expect(nearly_equal(rec.worker_capital, static_cast<double>(worker_sum), 1e-9) &&
                   nearly_equal(rec.capitalist_capital,
                                static_cast<double>(capitalist_sum), 1e-9),
               "closing stocks drift from the prefix sums at t=" +
                   std::to_string(rec.t));
      }
    }
    return "2 runs x 10000 periods within 1e-9";
  });

  checker.run("uniform-profit-rate", [&] {
    Rng rng(opt.seed ^ 0x11);
    const int runs = std::clamp(opt.samples / 100, 10, 100);
    for (int i = 0; i < runs; ++i) {
      const ScenarioConfig config = random_scenario(
          rng, rng.coin() ? ClosureMode::unconstrained : ClosureMode::contract);
      const Trajectory traj = simulate(config);
      for (const PeriodRecord& rec : traj.records) {
        EconomyState state;
        state.wage = rec.wage;
        state.worker_profit = rec.worker_profit;
        state.capitalist_profit = rec.capitalist_profit;
        state.worker_capital = rec.worker_capital - rec.worker_saving;
        state.capitalist_capital = rec.capitalist_capital - rec.capitalist_saving;
        state.investment = rec.saving;
        if (!(state.worker_capital > 0.0) || !(state.capitalist_capital > 0.0))
          continue;
        const ProfitRateResidual residual = uniform_profit_rate_residual(state);
        expect(nearly_equal(residual.worker, 0.0, tol) &&
                   nearly_equal(residual.capitalist, 0.0, tol),
               "simulated incomes lost the uniform profit rate at t=" +
                   std::to_string(rec.t));
      }
    }
    return std::to_string(runs) + " runs checked";
  });

  checker.run("contract-growth-monotonicity", [&] {
    Rng rng(opt.seed ^ 0x12);
    const int runs = std::clamp(opt.samples / 100, 10, 100);
    for (int i = 0; i < runs; ++i) {
      const ScenarioConfig config = random_scenario(rng, ClosureMode::contract);
      ScenarioConfig unconstrained = config;
      unconstrained.mode = ClosureMode::unconstrained;
      const Trajectory restricted_run = simulate(config);
      const Trajectory base = simulate(unconstrained);
      for (int t = 0; t < config.horizon; ++t) {
        const double gap = restricted_run.records[static_cast<std::size_t>(t)].capital -
                           base.records[static_cast<std::size_t>(t)].capital;
        expect(gap <= tol * std::max(1.0, base.records[static_cast<std::size_t>(t)].capital),
               "contract run overtook the unconstrained run at t=" + std::to_string(t));
      }
      const GrowthComparison cmp = compare_growth(config);
      expect(cmp.contract_terminal_capital <= cmp.unconstrained_terminal_capital,
             "terminal capital comparison inverted");
    }
    return std::to_string(runs) + " paired runs";
  });

  checker.run("carryover-accumulation", [&] {
    Rng rng(opt.seed ^ 0x13);
    const int runs = std::clamp(opt.samples / 100, 10, 200);
    for (int i = 0; i < runs; ++i) {
      SavingsCapacity base;
      base.worker = rng.log_uniform(1e-2, 1e4);
      base.capitalist = rng.log_uniform(1e-2, 1e4);
      const double contract = rng.log_uniform(1e-2, 1e2);
      if (nearly_equal(base.worker / base.capitalist, contract, 1e-6)) continue;
      CarriedUnsaved carried;
      double previous = 0.0;
      for (int t = 0; t < 200; ++t) {
        SavingsCapacity capacity = base;
        capacity.worker += carried.worker;
        capacity.capitalist += carried.capitalist;
        const RestrictedSavings r = restrict(capacity, ContractRatio(contract));
        carried.worker = r.worker_unsaved;
        carried.capitalist = r.capitalist_unsaved;
        const double stock = carried.worker + carried.capitalist;
        expect(stock >= previous * (1.0 - tol),
               "carried unsaved stock shrank at t=" + std::to_string(t));
        expect(stock > 0.0, "binding contract produced no unsaved capacity");
        previous = stock;
      }
    }
    return std::to_string(runs) + " recurrences of 200 periods";
  });

  checker.run("profit-rate-closure", [&] {
    // Wage path chosen so the propensity constraint holds each period;
    // the realized profit rate must then match the closed form with the
    // realized saving standing in for investment.
    const double worker_propensity = 0.1;
    const double capitalist_propensity = 0.5;
    const double rate = 0.04;
    const double wage_multiple = capitalist_propensity / worker_propensity - 1.0;
    const int horizon = 50;
    std::vector<double> wages;
    wages.reserve(horizon);
    double worker_capital = 50.0;
    double capitalist_capital = 150.0;
    for (int t = 0; t < horizon; ++t) {
      const double worker_profit = rate * worker_capital;
      const double wage = wage_multiple * worker_profit;
      wages.push_back(wage);
      worker_capital += worker_propensity * (wage + worker_profit);
      capitalist_capital += capitalist_propensity * (rate * capitalist_capital);
    }
    ScenarioConfig config;
    config.horizon = horizon;
    config.initial_worker_capital = 50.0;
    config.initial_capitalist_capital = 150.0;
    config.profit_rate_path = SeriesSpec::constant(rate);
    config.wage_path = SeriesSpec::list(wages);
    config.propensities = Propensities{worker_propensity, capitalist_propensity};
    const Trajectory traj = simulate(config);
    for (const PeriodRecord& rec : traj.records) {
      const double opening_capital = rec.capital - rec.saving;
      const double realized = rec.profit / opening_capital;
      const double closed =
          pasinetti_profit_rate(capitalist_propensity, rec.saving, opening_capital);
      expect(nearly_equal(realized, closed, 1e-9),
             "closure mismatch at t=" + std::to_string(rec.t) + ": " +
                 fmt(realized) + " vs " + fmt(closed));
    }
    return std::string();
  });

  checker.run("csv-round-trip", [&] {
    Rng rng(opt.seed ^ 0x14);
    const int runs = std::clamp(opt.samples / 500, 4, 20);
    for (int i = 0; i < runs; ++i) {
      const ScenarioConfig config = random_scenario(
          rng, rng.coin() ? ClosureMode::unconstrained : ClosureMode::contract);
      const Trajectory traj = simulate(config);
      const Trajectory back = parse_trajectory_csv(trajectory_to_csv(traj));
      expect(back.records.size() == traj.records.size(), "row count changed");
      for (std::size_t k = 0; k < traj.records.size(); ++k) {
        const PeriodRecord& a = traj.records[k];
        const PeriodRecord& b = back.records[k];
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
        for (auto& [x, y] : pairs) {
          const bool both_nan = std::isnan(x) && std::isnan(y);
          expect(both_nan || nearly_equal(x, y, 1e-15),
                 "field changed across the CSV round trip at t=" +
                     std::to_string(a.t));
        }
      }
    }
    return std::to_string(runs) + " trajectories round-tripped";
  });

  return checker.results;
}

}  // namespace distdyn
