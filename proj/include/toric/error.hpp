#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on an object that does not satisfy its
/// precondition (for example Chow queries on an invalid fan).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two computation routes that must agree did not, or an exact result that
/// must be integral was not. Always a bug or a corrupted input, never data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 64-bit integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace toric
