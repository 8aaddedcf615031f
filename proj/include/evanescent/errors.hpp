#pragma once

#include <stdexcept>
#include <string>

namespace evanescent {

enum class ErrorKind {
  NonConvergence,
  NotANumber,
  PoleOnContour,
  DegenerateDenominator,
  NoCrossing,
};

const char* to_string(ErrorKind kind);

// Raised when a computation cannot deliver a finite, converged value.
// Precondition violations use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace evanescent
