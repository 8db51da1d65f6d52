#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

// Precondition violations on shapes, orders, grids and indices.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation would allocate more coefficients than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (non-unit norm,
// non-mirror-symmetric kernel, quantile level outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wigner
