#include "copermanent/error.hpp"

namespace copermanent {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidByte: return "InvalidByte";
    case ErrorKind::TruncatedPayload: return "TruncatedPayload";
    case ErrorKind::NonzeroPadding: return "NonzeroPadding";
    case ErrorKind::TrailingBytes: return "TrailingBytes";
    case ErrorKind::InvalidAdjacency: return "InvalidAdjacency";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::EvaluationOverflow: return "EvaluationOverflow";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::DuplicateGraph: return "DuplicateGraph";
    case ErrorKind::MalformedRecord: return "MalformedRecord";
  }
  return "Unknown";
}

}  // namespace copermanent
