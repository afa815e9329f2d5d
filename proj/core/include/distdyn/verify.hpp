#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distdyn/numeric.hpp"

namespace distdyn {

struct VerifyOptions {
  int samples = 10000;             // per randomized check
  std::uint64_t seed = 987654321;  // every suite is reproducible from this
  double tolerance = kDefaultTolerance;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The full identity/property suite: static distribution identities, the
// contract-restriction invariants (with the conditional-function formulas
// as an independent oracle), accumulation-dynamics invariants, and the
// CSV round trip. Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace distdyn
