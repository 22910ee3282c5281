#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Caller passed something outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition (beyond plain argument shape) does not hold.
class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Something the mathematics guarantees did not happen: a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

inline void require_pre(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace springer
