#pragma once

#include <stdexcept>
#include <string>

namespace mlbiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fractional power would have to be evaluated on its branch cut.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed, mismatched or too coarse sampling grid.
class GridError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Unreadable input file (bad header, non-numeric field, nonuniform grid).
class FormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative evaluation (series, quadrature) did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mlbiv
