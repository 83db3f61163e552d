#include "ehvi/error.hpp"

namespace ehvi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DominatedMember: return "DominatedMember";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::ReferenceNotDominated: return "ReferenceNotDominated";
    case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::InvalidPredictor: return "InvalidPredictor";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ConvergenceFailure::ConvergenceFailure(double previous, double last, const std::string& message)
    : Error(ErrorKind::ConvergenceFailure, message), previous_(previous), last_(last) {}

}  // namespace ehvi
