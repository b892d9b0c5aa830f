#include "evreg/error.hpp"

namespace evreg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::VarOutOfRange: return "VarOutOfRange";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::InfiniteZeroSet: return "InfiniteZeroSet";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::ClosedFormInvalid: return "ClosedFormInvalid";
    case ErrorCode::CertificateViolation: return "CertificateViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UndefinedName: return "UndefinedName";
    case ErrorCode::UnsupportedCommand: return "UnsupportedCommand";
    case ErrorCode::GoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

}  // namespace evreg
