#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmlab {

/// Reasons an input is rejected before any numerical work starts.
enum class ValidationCode {
  InvalidPoint,
  InvalidArgument,
  NearIntegerAlpha,
  NonpositiveEpsilon,
  StencilLeavesDomain,
  DegenerateDesign,
  InvalidGrid,
  GrowthViolation,
  DimensionMismatch,
  InvalidEnsemble,
  AlphaTooLarge,
  ZeroDirection,
  DegenerateAngle,
  KTooSmall,
  InadmissiblePair,
  ParseError,
};

/// Reasons a numerical procedure could not deliver its contract.
enum class NumericalCode {
  MaxSubdivisionsExceeded,
  QuadratureFailure,
  NonFiniteSample,
  DivergenceDetected,
  GateFailed,
};

std::string_view to_string(ValidationCode code);
std::string_view to_string(NumericalCode code);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  ValidationError(ValidationCode code, const std::string& what)
      : Error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ValidationCode code() const noexcept { return code_; }

 private:
  ValidationCode code_;
};

class NumericalError : public Error {
 public:
  NumericalError(NumericalCode code, const std::string& what)
      : Error(std::string(to_string(code)) + ": " + what), code_(code) {}
  NumericalCode code() const noexcept { return code_; }

 private:
  NumericalCode code_;
};

inline std::string_view to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::InvalidPoint: return "InvalidPoint";
    case ValidationCode::InvalidArgument: return "InvalidArgument";
    case ValidationCode::NearIntegerAlpha: return "NearIntegerAlpha";
    case ValidationCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ValidationCode::StencilLeavesDomain: return "StencilLeavesDomain";
    case ValidationCode::DegenerateDesign: return "DegenerateDesign";
    case ValidationCode::InvalidGrid: return "InvalidGrid";
    case ValidationCode::GrowthViolation: return "GrowthViolation";
    case ValidationCode::DimensionMismatch: return "DimensionMismatch";
    case ValidationCode::InvalidEnsemble: return "InvalidEnsemble";
    case ValidationCode::AlphaTooLarge: return "AlphaTooLarge";
    case ValidationCode::ZeroDirection: return "ZeroDirection";
    case ValidationCode::DegenerateAngle: return "DegenerateAngle";
    case ValidationCode::KTooSmall: return "KTooSmall";
    case ValidationCode::InadmissiblePair: return "InadmissiblePair";
    case ValidationCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

inline std::string_view to_string(NumericalCode code) {
  switch (code) {
    case NumericalCode::MaxSubdivisionsExceeded: return "MaxSubdivisionsExceeded";
    case NumericalCode::QuadratureFailure: return "QuadratureFailure";
    case NumericalCode::NonFiniteSample: return "NonFiniteSample";
    case NumericalCode::DivergenceDetected: return "DivergenceDetected";
    case NumericalCode::GateFailed: return "GateFailed";
  }
  return "Unknown";
}

}  // namespace harmlab
