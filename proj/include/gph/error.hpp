#pragma once

#include <stdexcept>
#include <string>

namespace gph {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input (bad ids, non-commuting maps, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive search exceeded its node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A graph that was required to have exactly one arc entering every node.
class NotAnNGraph : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A ghost sequence whose Moebius inversion is not a nonnegative integer vector.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

// Self-test failures. These indicate a bug, never bad input.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace gph
