#pragma once

#include <stdexcept>
#include <string>

namespace milnor_jump {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain: malformed
/// exponents, a monomial on or above the diagram, a non-convenient support.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A dimension or enumeration guard was exceeded.
class GuardExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An exact quantity that must be integral (or self-consistent) was not.
/// This always means a bug in the geometry or the recursion.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace milnor_jump
