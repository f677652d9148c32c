#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nhodge {

enum class ErrorCode {
  Syntax,
  NegativeExponent,
  BadVariable,
  Empty,
  UnknownCell,
  Degenerate,
  Outside,
  DimMismatch,
  EmptyCell,
  CayleyMismatch,
  NotEulerian,
  NotUnimodal,
  NonPolynomial,
  BadLambda,
  NotApplicable,
  Inconsistent,
  TooLarge,
  UnsupportedDim,
  Internal,
};

// Stable identifier such as "E_SYNTAX".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace nhodge
