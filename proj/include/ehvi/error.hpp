#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ehvi {

enum class ErrorKind {
  DimensionMismatch,
  DominatedMember,
  DuplicatePoint,
  ReferenceNotDominated,
  NonFiniteCoordinate,
  InvalidPredictor,
  InvalidArgument,
  ConvergenceFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is
/// what callers (and the CLI) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the quadrature oracle when refinement hits its cap.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(double previous, double last, const std::string& message);

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

}  // namespace ehvi
