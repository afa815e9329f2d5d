#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace distdyn {

// Default comparison tolerance for algebraic identities checked in doubles.
inline constexpr double kDefaultTolerance = 1e-12;

// Relative comparison with an absolute floor near zero:
// |a - b| <= tol * max(1, |a|, |b|).
inline bool nearly_equal(double a, double b, double tol = kDefaultTolerance) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// Degenerate numeric input: zero denominator, out-of-range propensity,
// non-finite value where a finite one is required.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent scenario configuration / document.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_finite(double value, const char* name) {
  if (!std::isfinite(value))
    throw DomainError(std::string(name) + " must be finite");
}

inline void require_nonnegative(double value, const char* name) {
  require_finite(value, name);
  if (value < 0.0)
    throw DomainError(std::string(name) + " must be non-negative");
}

inline void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (!(value > 0.0))
    throw DomainError(std::string(name) + " must be strictly positive");
}

}  // namespace distdyn
