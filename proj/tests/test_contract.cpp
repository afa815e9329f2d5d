#include "distdyn/contract.hpp"

#include <algorithm>
#include <cmath>

#include "distdyn/rng.hpp"
#include "doctest.h"

using namespace distdyn;

namespace {

// Independent route: the conditional-function formulas evaluated verbatim.
// The library's closed-form case split must agree with these everywhere
// away from the equal-ratio snap window.
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

}  // namespace

TEST_CASE("capacity ratio") {
  CHECK(capacity_ratio({5, 20}) == 0.25);
  CHECK(capacity_ratio({4, 20}) == 0.2);
  CHECK(capacity_ratio({0, 20}) == 0.0);
  CHECK_THROWS_AS(capacity_ratio({5, 0}), DomainError);
  CHECK_THROWS_AS(capacity_ratio({-1, 20}), DomainError);
}

TEST_CASE("conditional functions select a single binding side") {
  CHECK(nearly_equal(conditional_m1(0.25, 0.2), 0.05));
  CHECK(conditional_m2(0.25, 0.2) == 0.0);
  CHECK(conditional_m1(0.2, 0.25) == 0.0);
  CHECK(nearly_equal(conditional_m2(0.2, 0.25), 0.05));
  CHECK(conditional_m1(0.3, 0.3) == 0.0);
  CHECK(conditional_m2(0.3, 0.3) == 0.0);
  CHECK_THROWS_AS(conditional_m1(-0.1, 0.2), DomainError);
  CHECK_THROWS_AS(conditional_m2(0.1, 0.0), DomainError);

  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double r1 = rng.log_uniform(1e-4, 1e4);
    const double contract = rng.log_uniform(1e-4, 1e4);
    CHECK(conditional_m1(r1, contract) * conditional_m2(r1, contract) == 0.0);
  }
}

TEST_CASE("restriction reproduces the worked examples exactly") {
  // Workers over capacity: they save 4 of their 5.
  const RestrictedSavings one = restrict({5, 20}, ContractRatio(1.0 / 5.0));
  CHECK(one.worker_actual == 4.0);
  CHECK(one.capitalist_actual == 20.0);
  CHECK(one.worker_unsaved == 1.0);
  CHECK(one.capitalist_unsaved == 0.0);

  // Capitalists over capacity: they save 16 of their 20.
  const RestrictedSavings two = restrict({4, 20}, ContractRatio(1.0 / 4.0));
  CHECK(two.worker_actual == 4.0);
  CHECK(two.capitalist_actual == 16.0);
  CHECK(two.worker_unsaved == 0.0);
  CHECK(two.capitalist_unsaved == 4.0);
}

TEST_CASE("restriction leaves a matching ratio untouched") {
  const RestrictedSavings flat = restrict({6, 30}, ContractRatio(0.2));
  CHECK(flat.worker_actual == 6.0);
  CHECK(flat.capitalist_actual == 30.0);
  CHECK(flat.total_unsaved() == 0.0);

  // Within the relative snap window nothing is restricted either.
  const double contract = 0.25 * (1.0 + 5e-13);
  const RestrictedSavings snapped = restrict({5, 20}, ContractRatio(contract));
  CHECK(snapped.worker_actual == 5.0);
  CHECK(snapped.capitalist_actual == 20.0);
  CHECK(snapped.total_unsaved() == 0.0);
}

TEST_CASE("restriction edge conventions") {
  const RestrictedSavings both_zero = restrict({0, 0}, ContractRatio(0.5));
  CHECK(both_zero.worker_actual == 0.0);
  CHECK(both_zero.capitalist_actual == 0.0);
  CHECK(both_zero.total_unsaved() == 0.0);

  // Zero capitalist capacity: nothing can be saved at a positive ratio.
  const RestrictedSavings no_capitalist = restrict({7, 0}, ContractRatio(0.5));
  CHECK(no_capitalist.worker_actual == 0.0);
  CHECK(no_capitalist.capitalist_actual == 0.0);
  CHECK(no_capitalist.worker_unsaved == 7.0);
  CHECK(no_capitalist.capitalist_unsaved == 0.0);

  // Zero worker capacity: capitalists are fully restricted.
  const RestrictedSavings no_worker = restrict({0, 9}, ContractRatio(0.5));
  CHECK(no_worker.worker_actual == 0.0);
  CHECK(no_worker.capitalist_actual == 0.0);
  CHECK(no_worker.capitalist_unsaved == 9.0);
  CHECK(no_worker.worker_unsaved == 0.0);

  CHECK_THROWS_AS(ContractRatio(0.0), DomainError);
  CHECK_THROWS_AS(ContractRatio(-0.5), DomainError);
  CHECK_THROWS_AS(restrict({-1, 5}, ContractRatio(0.5)), DomainError);
}

TEST_CASE("at the ratio boundary the literal form returns the capacity") {
  // With M2 = 0 and R_1 = R the conditional-function form FCS_w/(M2+R_1)
  // collapses to FCS_c.
  Rng rng(313);
  for (int i = 0; i < 500; ++i) {
    SavingsCapacity cap;
    cap.worker = rng.log_uniform(1e-3, 1e6);
    cap.capitalist = rng.log_uniform(1e-3, 1e6);
    const double r1 = cap.worker / cap.capitalist;
    const RestrictedSavings literal = literal_restriction(cap, r1);
    CHECK(nearly_equal(literal.capitalist_actual, cap.capitalist));
    const RestrictedSavings closed = restrict(cap, ContractRatio(r1));
    CHECK(closed.capitalist_actual == cap.capitalist);
    CHECK(closed.total_unsaved() == 0.0);
  }
}

TEST_CASE("closed form matches the conditional-function formulas") {
  Rng rng(999);
  int used = 0;
  for (int i = 0; i < 10000; ++i) {
    SavingsCapacity cap;
    cap.worker = rng.log_uniform(1e-4, 1e8);
    cap.capitalist = rng.log_uniform(1e-4, 1e8);
    const double contract = rng.log_uniform(1e-3, 1e3);
    if (nearly_equal(cap.worker / cap.capitalist, contract, 1e-6)) continue;
    ++used;
    const RestrictedSavings closed = restrict(cap, ContractRatio(contract));
    const RestrictedSavings literal = literal_restriction(cap, contract);
    const double scale = std::max({1.0, cap.worker, cap.capitalist});
    CHECK(std::fabs(closed.worker_actual - literal.worker_actual) <= 1e-12 * scale);
    CHECK(std::fabs(closed.capitalist_actual - literal.capitalist_actual) <= 1e-12 * scale);
    CHECK(std::fabs(closed.worker_unsaved - literal.worker_unsaved) <= 1e-12 * scale);
    CHECK(std::fabs(closed.capitalist_unsaved - literal.capitalist_unsaved) <= 1e-12 * scale);
  }
  CHECK(used > 9000);
}

TEST_CASE("restriction invariants over random samples") {
  Rng rng(5150);
  for (int i = 0; i < 10000; ++i) {
    SavingsCapacity cap;
    cap.worker = rng.uniform01() < 0.02 ? 0.0 : rng.log_uniform(1e-4, 1e8);
    cap.capitalist = rng.log_uniform(1e-4, 1e8);
    const double contract = rng.log_uniform(1e-3, 1e3);
    const RestrictedSavings r = restrict(cap, ContractRatio(contract));

    // Ratio enforcement.
    if (r.capitalist_actual > 0.0)
      CHECK(nearly_equal(r.worker_actual / r.capitalist_actual, contract));
    // Conservation, verified rather than imposed.
    CHECK(nearly_equal(r.worker_actual + r.worker_unsaved, cap.worker));
    CHECK(nearly_equal(r.capitalist_actual + r.capitalist_unsaved, cap.capitalist));
    // Bounds and one-sidedness.
    CHECK(r.worker_actual >= 0.0);
    CHECK(r.worker_actual <= cap.worker);
    CHECK(r.capitalist_actual >= 0.0);
    CHECK(r.capitalist_actual <= cap.capitalist);
    CHECK(r.worker_unsaved * r.capitalist_unsaved == 0.0);
    // Unsaved capacity appears exactly when the ratios differ.
    CHECK(nearly_equal(cap.worker / cap.capitalist, contract) ==
          (r.total_unsaved() == 0.0));
  }
}

TEST_CASE("restriction is homogeneous and idempotent") {
  Rng rng(8080);
  const double lambdas[] = {1e-6, 1e3, 1e9};
  for (int i = 0; i < 2000; ++i) {
    SavingsCapacity cap;
    cap.worker = rng.log_uniform(1e-3, 1e6);
    cap.capitalist = rng.log_uniform(1e-3, 1e6);
    const double contract = rng.log_uniform(1e-2, 1e2);
    const RestrictedSavings base = restrict(cap, ContractRatio(contract));

    for (double lambda : lambdas) {
      const RestrictedSavings scaled =
          restrict({cap.worker * lambda, cap.capitalist * lambda}, ContractRatio(contract));
      CHECK(nearly_equal(scaled.worker_actual, base.worker_actual * lambda));
      CHECK(nearly_equal(scaled.capitalist_actual, base.capitalist_actual * lambda));
      CHECK(nearly_equal(scaled.worker_unsaved, base.worker_unsaved * lambda));
      CHECK(nearly_equal(scaled.capitalist_unsaved, base.capitalist_unsaved * lambda));
    }

    const RestrictedSavings again =
        restrict({base.worker_actual, base.capitalist_actual}, ContractRatio(contract));
    CHECK(again.worker_actual == base.worker_actual);
    CHECK(again.capitalist_actual == base.capitalist_actual);
    CHECK(again.total_unsaved() == 0.0);
  }
}
