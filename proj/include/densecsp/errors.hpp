#pragma once

#include <stdexcept>
#include <string>

namespace densecsp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad instance, bad parameters, bad file. CLI exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// An assignment that is not total or uses out-of-range labels.
struct InvalidAssignmentError : ValidationError {
  using ValidationError::ValidationError;
};

// Operation invoked on the wrong instance kind.
struct KindError : ValidationError {
  using ValidationError::ValidationError;
};

// A complete-game candidate set emptied out: the instance (or the given
// restriction) is not satisfiable.
struct UnsatisfiableError : ValidationError {
  int vertex;
  UnsatisfiableError(int v, const std::string& msg)
      : ValidationError(msg), vertex(v) {}
};

// Requested work exceeds the configured budget. CLI exit code 3.
struct BudgetError : Error {
  long long required;
  BudgetError(long long req, const std::string& msg)
      : Error(msg), required(req) {}
};

// Recursion level or (nq)^{2i} size cap exceeded.
struct LevelBudgetError : BudgetError {
  using BudgetError::BudgetError;
};

// Random partition retries exhausted; rerun with a different seed.
struct RetryError : BudgetError {
  using BudgetError::BudgetError;
};

}  // namespace densecsp
