#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopflab {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  DepthExceeded,
  NotInBaseField,
  InexactDivision,
  AlgebraMismatch,
  SlotMismatch,
  FieldMismatch,
  InvalidParameters,
  BaseFieldViolation,
  NotPrimitive,
  BadIndex,
  NotInvertible,
  NotGalois,
  NotWellDefined,
  ScopeError,
  ShapeMismatch,
  BadN,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::NotInBaseField: return "NotInBaseField";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::SlotMismatch: return "SlotMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::BaseFieldViolation: return "BaseFieldViolation";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hopflab
