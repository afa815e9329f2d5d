#include "distdyn/contract.hpp"

#include <algorithm>

namespace distdyn {

void SavingsCapacity::validate() const {
  require_nonnegative(worker, "SavingsCapacity.worker");
  require_nonnegative(capitalist, "SavingsCapacity.capitalist");
}

ContractRatio::ContractRatio(double ratio) : value(ratio) {
  require_positive(ratio, "ContractRatio");
}

double capacity_ratio(const SavingsCapacity& capacity) {
  capacity.validate();
  if (!(capacity.capitalist > 0.0))
    throw DomainError("capacity_ratio: capitalist capacity must be positive");
  return capacity.worker / capacity.capitalist;
}

double conditional_m1(double capacity_ratio, double contract_ratio) {
  require_nonnegative(capacity_ratio, "capacity_ratio");
  require_positive(contract_ratio, "contract_ratio");
  return std::max(capacity_ratio - contract_ratio, 0.0);
}

double conditional_m2(double capacity_ratio, double contract_ratio) {
  require_nonnegative(capacity_ratio, "capacity_ratio");
  require_positive(contract_ratio, "contract_ratio");
  return std::max(contract_ratio - capacity_ratio, 0.0);
}

RestrictedSavings restrict(const SavingsCapacity& capacity,
                           const ContractRatio& contract) {
  capacity.validate();
  RestrictedSavings out;
  if (capacity.worker == 0.0 && capacity.capitalist == 0.0) return out;

  if (capacity.capitalist == 0.0) {
    // No capitalist saving to pair against: the whole worker capacity sits idle.
    out.worker_unsaved = capacity.worker;
    return out;
  }

  const double ratio = capacity.worker / capacity.capitalist;  // R_1
  if (nearly_equal(ratio, contract.value)) {
    // Unbinding contract: capacities already in the contracted proportion.
    out.worker_actual = capacity.worker;
    out.capitalist_actual = capacity.capitalist;
    return out;
  }

  if (ratio > contract.value) {
    // Workers over capacity relative to the contract.
    out.worker_actual = contract.value * capacity.capitalist;
    out.capitalist_actual = capacity.capitalist;
    out.worker_unsaved = capacity.worker - out.worker_actual;
  } else {
    // Capitalists over capacity relative to the contract.
    out.worker_actual = capacity.worker;
    out.capitalist_actual = capacity.worker / contract.value;
    out.capitalist_unsaved = capacity.capitalist - out.capitalist_actual;
  }
  return out;
}

}  // namespace distdyn
