#pragma once

#include <stdexcept>
#include <string>

namespace nazeta {

// Base of every library error. The CLI maps the concrete type onto its exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

// An exact check that was expected to hold did not (exit code 1).
class VerificationError : public Error {
 public:
  using Error::Error;
};

// A validation gate that must pass before results can be trusted (exit code 3).
class GateFailure : public Error {
 public:
  using Error::Error;
};

// An operation was asked for something outside its mathematical domain:
// division by zero, a pole where a regular value is needed, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A geometric series whose ratio does not have absolute value < 1.
class NonContractingSeries : public DomainError {
 public:
  using DomainError::DomainError;
};

// Numeric root refinement failed to reach the requested residual.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace nazeta
