#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evreg {

enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  NotInvertible,
  ArityMismatch,
  ExponentOverflow,
  AllZero,
  VarOutOfRange,
  ZeroInput,
  NotHomogeneous,
  DegreeMismatch,
  ZeroDenominator,
  NotExact,
  DegreeCapExceeded,
  NotDominant,
  NotRegular,
  InfiniteZeroSet,
  IncompleteFan,
  ClosedFormInvalid,
  CertificateViolation,
  SyntaxError,
  UnknownVariable,
  DuplicateName,
  UndefinedName,
  UnsupportedCommand,
  GoldenMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this one exception type;
// callers switch on code() rather than on a class hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evreg
