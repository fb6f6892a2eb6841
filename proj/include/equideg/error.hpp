#pragma once

#include <stdexcept>
#include <string>

namespace equideg {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad JSON, bad polynomial string, inconsistent sizes).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (division by zero, non-unit, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the Bezout/Euler-number theorems is violated:
/// non-isolated zeros, sections that are not semi-invariant, etc.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// Zeros could not all be located; some multiplicity mass is unaccounted.
class UnresolvedLocus : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace equideg
