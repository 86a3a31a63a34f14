#pragma once

#include <stdexcept>
#include <string>

namespace modhowe {

/// Precondition violation on user-supplied parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter combination outside the supported theory (p = 2 for
/// quadratic objects, ell = 2, ell = p).
class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace modhowe
