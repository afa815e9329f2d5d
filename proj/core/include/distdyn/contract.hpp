#pragma once

#include "distdyn/numeric.hpp"

namespace distdyn {

// Contract-constrained savings: holding the workers/capitalists saving
// ratio at a fixed contracted value R forces the class with the higher
// capacity ratio to save less than its full capacity. The shortfall is
// tracked explicitly as unsaved capacity.

// Per-class full capacity to save for one period.
struct SavingsCapacity {
  double worker = 0.0;      // FCS_w
  double capitalist = 0.0;  // FCS_c

  void validate() const;
};

// The contracted savings ratio R = S_w/S_c. Exogenous, finite, strictly
// positive; R = 0 (workers save nothing) is expressible only as zero
// worker capacity.
struct ContractRatio {
  explicit ContractRatio(double ratio);
  double value;
};

struct RestrictedSavings {
  double worker_actual = 0.0;       // S_w
  double capitalist_actual = 0.0;   // S_c
  double worker_unsaved = 0.0;      // US_w
  double capitalist_unsaved = 0.0;  // US_c

  double total_actual() const { return worker_actual + capitalist_actual; }
  double total_unsaved() const { return worker_unsaved + capitalist_unsaved; }
};

// Capacity ratio R_1 = FCS_w / FCS_c. Undefined at zero capitalist
// capacity; restrict() handles that case without forming the ratio.
double capacity_ratio(const SavingsCapacity& capacity);

// Conditional switches selecting which class the contract binds:
// M1 = max(R_1 - R, 0), M2 = max(R - R_1, 0). At most one is positive.
double conditional_m1(double capacity_ratio, double contract_ratio);
double conditional_m2(double capacity_ratio, double contract_ratio);

// Actual savings and unsaved capacities under the contract.
//
// When R_1 > R the workers are cut to S_w = R*FCS_c (capitalists save in
// full); when R_1 < R the capitalists are cut to S_c = FCS_w/R (workers
// save in full). These are the closed forms of
//   S_w = FCS_w - FCS_c*M1,  S_c = FCS_w/(M2 + R_1),
//   US_w = FCS_c*M1,         US_c = FCS_c*M2/(M2 + R_1),
// evaluated without the cancellations that would otherwise lose the exact
// rational values of small examples. R_1 == R is detected with relative
// tolerance 1e-12 and leaves both classes unrestricted.
//
// Edge conventions: both capacities zero -> all-zero result; zero
// capitalist capacity with positive worker capacity -> nobody saves and
// the whole worker capacity is unsaved (a positive ratio cannot be
// honored against zero capitalist saving).
RestrictedSavings restrict(const SavingsCapacity& capacity,
                           const ContractRatio& contract);

}  // namespace distdyn
