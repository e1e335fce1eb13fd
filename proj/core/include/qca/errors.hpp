#pragma once

#include <stdexcept>
#include <string>

namespace qca {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural requirement (skew-Hermitian, unitary, density, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a precondition that is not a shape or value check.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Model-family parameter missing or out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The numerics cannot give a trustworthy integer answer for this input.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

}  // namespace qca
