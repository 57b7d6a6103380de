#pragma once

#include <stdexcept>
#include <string>

namespace crossbessel {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical or implemented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series or iteration hit its term/iteration budget.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Division by a (numerically) vanishing denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A zero table or coefficient table is too short for the request.
class InsufficientDepthError : public Error {
 public:
  using Error::Error;
};

// An expected sign change was not found; indicates a broken bracket.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Bisection was handed endpoints with the same residual sign.
class NoSignChangeError : public Error {
 public:
  using Error::Error;
};

// Shah-Trimble needs every zero outside the unit disk.
class FirstZeroInsideDiskError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace crossbessel
