#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine would exceed its enumeration budget.
class SizeGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when input is well-formed but does not describe a valid object,
/// e.g. a kernel generator that does not land in the compact part.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drinfeld
