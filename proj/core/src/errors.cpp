#include "nhodge/errors.hpp"

namespace nhodge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::NegativeExponent: return "E_NEGATIVE_EXPONENT";
    case ErrorCode::BadVariable: return "E_BAD_VARIABLE";
    case ErrorCode::Empty: return "E_EMPTY";
    case ErrorCode::UnknownCell: return "E_UNKNOWN_CELL";
    case ErrorCode::Degenerate: return "E_DEGENERATE";
    case ErrorCode::Outside: return "E_OUTSIDE";
    case ErrorCode::DimMismatch: return "E_DIM_MISMATCH";
    case ErrorCode::EmptyCell: return "E_EMPTY_CELL";
    case ErrorCode::CayleyMismatch: return "E_CAYLEY_MISMATCH";
    case ErrorCode::NotEulerian: return "E_NOT_EULERIAN";
    case ErrorCode::NotUnimodal: return "E_NOT_UNIMODAL";
    case ErrorCode::NonPolynomial: return "E_NONPOLYNOMIAL";
    case ErrorCode::BadLambda: return "E_BAD_LAMBDA";
    case ErrorCode::NotApplicable: return "E_NOT_APPLICABLE";
    case ErrorCode::Inconsistent: return "E_INCONSISTENT";
    case ErrorCode::TooLarge: return "E_TOO_LARGE";
    case ErrorCode::UnsupportedDim: return "E_UNSUPPORTED_DIM";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorCode::Syntax, "at offset " + std::to_string(position) + ": " + message),
      position_(position) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace nhodge
