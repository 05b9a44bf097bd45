#pragma once

#include <stdexcept>
#include <string>

namespace hypertree {

// Base of all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input fails a stated hypothesis; CLI maps these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// Sequence or vector has the wrong length.
struct DimensionError : ValidationError {
  using ValidationError::ValidationError;
};

// A divisibility hypothesis fails; carries the hypothesis by name.
struct DivisibilityError : ValidationError {
  explicit DivisibilityError(const std::string& hyp)
      : ValidationError("divisibility hypothesis violated: " + hyp), hypothesis_(hyp) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : ValidationError {
  using ValidationError::ValidationError;
};

// Asymptotic formula undefined for these parameters.
struct RegimeError : ValidationError {
  using ValidationError::ValidationError;
};

// Caller broke an interface contract (not a user-input issue).
struct ContractError : ValidationError {
  using ValidationError::ValidationError;
};

// Work limit exhausted; CLI maps this to exit code 3.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace hypertree
