#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenmatrix {

enum class ErrorKind {
  DivisionByZero,
  ParseError,
  SchemaError,
  DimensionMismatch,
  NotSquare,
  Singular,
  ZeroVector,
  IrrationalSpectrum,
  InvalidSpectrum,
  WrongSpectrum,
  TargetNotInSpectrum,
  NotInSpectrum,
  NotDiagonalizable,
  Defective,
  SpectrumTooLarge,
  AllRowsParallel,
  RankTooLarge,
  RealifyOnComplexMatrix,
  GenerationFailed,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is the
/// machine-readable category and `what()` a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorKind::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorKind::WrongSpectrum: return "WrongSpectrum";
    case ErrorKind::TargetNotInSpectrum: return "TargetNotInSpectrum";
    case ErrorKind::NotInSpectrum: return "NotInSpectrum";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::Defective: return "Defective";
    case ErrorKind::SpectrumTooLarge: return "SpectrumTooLarge";
    case ErrorKind::AllRowsParallel: return "AllRowsParallel";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::RealifyOnComplexMatrix: return "RealifyOnComplexMatrix";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace eigenmatrix
