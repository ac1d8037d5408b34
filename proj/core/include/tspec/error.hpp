#pragma once

#include <stdexcept>
#include <string>

namespace tspec {

/// Malformed or out-of-range input to a library call.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two truncated polynomials living in rings with different exponent caps.
class RingMismatch : public ArgumentError {
public:
  using ArgumentError::ArgumentError;
};

/// A request whose expected output exceeds a configured resource cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (a solver bug or a mis-set tolerance).
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace tspec
