#pragma once

#include <stdexcept>

namespace ekr {

// A parameter outside the domain an operation is defined on (CLI exit 2).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant that must hold was violated (CLI exit 1).
struct PropertyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Refusal to run a computation beyond the built-in size limits (CLI exit 3).
struct ResourceGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An evaluator hit a point where it is undefined (division by zero).
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ekr
