#pragma once

#include <stdexcept>
#include <string>

namespace stg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (graph spec, SP expression, trace, formula).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested computation does not fit the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Target vertex cannot be reached from the source.
class NoPathError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Expected arrival is infinite (some required edge never appears).
class InfiniteExpectation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Too many Monte-Carlo experiments failed to reach the target.
class LowConfidenceError : public Error {
 public:
  LowConfidenceError(const std::string& what, long failures, long experiments)
      : Error(what), failures_(failures), experiments_(experiments) {}

  long failures() const noexcept { return failures_; }
  long experiments() const noexcept { return experiments_; }

 private:
  long failures_;
  long experiments_;
};

/// Fixed-point iteration did not settle within the iteration cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stg
