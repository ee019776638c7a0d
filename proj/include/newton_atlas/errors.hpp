#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newton_atlas {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The gradient of the polynomial vanishes along a curve.
class NonIsolatedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A face polynomial has a critical point in the torus.
class DegenerateError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A numerical routine could not certify its result.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace newton_atlas
