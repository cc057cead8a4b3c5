#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bier {

enum class ErrorCode {
  EmptyGround,
  GroundTooLarge,
  FullComplex,
  InvalidFace,
  NotDownwardClosed,
  NotGeneric,
  NotNormalized,
  InvalidWeights,
  NotInH0,
  NotInSpan,
  InvalidCircuit,
  NotFacet,
  NotMinimalNonface,
  NotProper,
  Range,
  WitnessInvalid,
  Degenerate,
  BudgetExceeded,
  Parse,
  Internal,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGround: return "EMPTY_GROUND";
    case ErrorCode::GroundTooLarge: return "GROUND_TOO_LARGE";
    case ErrorCode::FullComplex: return "FULL_COMPLEX";
    case ErrorCode::InvalidFace: return "INVALID_FACE";
    case ErrorCode::NotDownwardClosed: return "NOT_DOWNWARD_CLOSED";
    case ErrorCode::NotGeneric: return "NOT_GENERIC";
    case ErrorCode::NotNormalized: return "NOT_NORMALIZED";
    case ErrorCode::InvalidWeights: return "INVALID_WEIGHTS";
    case ErrorCode::NotInH0: return "NOT_IN_H0";
    case ErrorCode::NotInSpan: return "NOT_IN_SPAN";
    case ErrorCode::InvalidCircuit: return "INVALID_CIRCUIT";
    case ErrorCode::NotFacet: return "NOT_FACET";
    case ErrorCode::NotMinimalNonface: return "NOT_MINIMAL_NONFACE";
    case ErrorCode::NotProper: return "NOT_PROPER";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::WitnessInvalid: return "WITNESS_INVALID";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace bier
