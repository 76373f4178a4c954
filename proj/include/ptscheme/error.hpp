#ifndef PTSCHEME_ERROR_HPP
#define PTSCHEME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptscheme {

enum class ErrorCode {
  InvalidWindow,
  RingMismatch,
  DegreeOutOfRange,
  BadExponent,
  DefectMismatch,
  NotStable,
  NegativeExpectedDim,
  BadParameter,
  FieldMismatch,
  DimensionMismatch,
  DegreeMismatch,
  GeneralPositionUnreachable,
  GeneralPositionViolation,
  ParseError,
  InvalidWord,
  BudgetExceeded,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is what callers branch on;
/// the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ptscheme

#endif
