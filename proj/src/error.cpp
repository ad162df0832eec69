#include "idem/error.hpp"

namespace idem {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotSemifield: return "NotSemifield";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::StarDiverges: return "StarDiverges";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SemiringMismatch: return "SemiringMismatch";
    case ErrorKind::NonStabilizing: return "NonStabilizing";
    case ErrorKind::WeightOutOfCarrier: return "WeightOutOfCarrier";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NotMaxPlus: return "NotMaxPlus";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t col, const std::string& reason)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + reason),
      line_(line),
      col_(col) {}

}  // namespace idem
