#pragma once

#include <stdexcept>
#include <string>

namespace gateway {

/// Raised when an input violates a documented precondition or invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for filesystem failures; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gateway
