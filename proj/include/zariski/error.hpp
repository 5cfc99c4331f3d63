#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zariski {

enum class ErrorCode {
  InvalidOperand,
  NotDthRoot,
  InvalidDegree,
  ExcludedOrder,
  SingularMatrix,
  NotAnEdge,
  DegreeMismatch,
  PrecondViolation,
  DivisionNotExact,
  NotTriangular,
  NotTangentAtOnePoint,
  NotSmooth,
  NotNormalizable,
  WrongPolygon,
  EdgeNotPower,
  LocalTypeUnverified,
  NotNormalized,
  UnexpectedMultiplicity,
  NotCoprime,
  BranchAmbiguity,
  PathThroughCurve,
  IncompleteTable,
  NotSurjective,
  NotEliminable,
  BadParameters,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOperand: return "InvalidOperand";
    case ErrorCode::NotDthRoot: return "NotDthRoot";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::ExcludedOrder: return "ExcludedOrder";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PrecondViolation: return "PrecondViolation";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::NotTangentAtOnePoint: return "NotTangentAtOnePoint";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::WrongPolygon: return "WrongPolygon";
    case ErrorCode::EdgeNotPower: return "EdgeNotPower";
    case ErrorCode::LocalTypeUnverified: return "LocalTypeUnverified";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::UnexpectedMultiplicity: return "UnexpectedMultiplicity";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::PathThroughCurve: return "PathThroughCurve";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotEliminable: return "NotEliminable";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report it in a structured certificate.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace zariski
