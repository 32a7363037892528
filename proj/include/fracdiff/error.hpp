#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

// Argument outside the documented precondition (bad N, r, alpha, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematical domain violation: Gamma at x <= 0, negative power base, etc.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative evaluation (series, quadrature) failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes for the same quantity disagree.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear solve or time stepping broke an internal assumption.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracdiff
