#include "ptscheme/error.hpp"

namespace ptscheme {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::DefectMismatch: return "DefectMismatch";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NegativeExpectedDim: return "NegativeExpectedDim";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::GeneralPositionUnreachable: return "GeneralPositionUnreachable";
    case ErrorCode::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace ptscheme
