#pragma once

#include <stdexcept>
#include <string>

namespace cyarith {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed, out of range, or inconsistent arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PrimalityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A table or enumeration would exceed its documented size budget.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The prime divides a defining exponent, so the reduction is singular.
class BadReductionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A mathematical self-check failed. Always signals a bug or corrupt data.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cyarith
