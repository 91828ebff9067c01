#pragma once

#include <stdexcept>
#include <string>

namespace zimin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside an operation's domain (k = 0, malformed
/// Fibonacci digits, missing morphism image, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A result does not fit in 64 bits.
class Overflow : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured budget (length cap, node cap, memory budget) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace zimin
