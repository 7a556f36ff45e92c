#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latticegeom {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameter value (alpha <= 0, delta outside (0,1), ...). CLI exit 1.
struct ParameterError : Error {
  using Error::Error;
};

// Malformed or inconsistent input data (schema, dimensions, ids). CLI exit 2.
struct FormatError : Error {
  using Error::Error;
};

// Not enough or degenerate data to estimate a quantity.
struct EstimationError : Error {
  using Error::Error;
};

// Singular or ill-conditioned linear system.
struct NumericalError : Error {
  using Error::Error;
};

// API precondition violated, e.g. non-canonical models where canonical
// (zero-threshold) ones are required.
struct ContractError : Error {
  using Error::Error;
};

// Synthetic embedding placement failed.
struct GenerationError : Error {
  using Error::Error;
};

// Concept enumeration hit the caller-supplied budget.
struct BudgetExceededError : Error {
  std::size_t reached;
  BudgetExceededError(std::size_t count, const std::string& msg)
      : Error(msg), reached(count) {}
};

}  // namespace latticegeom
