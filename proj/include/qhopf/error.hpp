#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ShapeMismatch,
  InvalidPresentation,
  DoubleValidationFailure,
  NotQuasiTriangular,
  InvalidModule,
  IntegralDimensionAnomaly,
  CointegralDimensionAnomaly,
  NormalizationImpossible,
  NotNormalized,
  InvalidGroup,
  CocycleInvalid,
  NotInvertible,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::DoubleValidationFailure: return "DoubleValidationFailure";
    case ErrorCode::NotQuasiTriangular: return "NotQuasiTriangular";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::IntegralDimensionAnomaly: return "IntegralDimensionAnomaly";
    case ErrorCode::CointegralDimensionAnomaly: return "CointegralDimensionAnomaly";
    case ErrorCode::NormalizationImpossible: return "NormalizationImpossible";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::CocycleInvalid: return "CocycleInvalid";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qhopf
