#pragma once

#include <stdexcept>
#include <string>

namespace tsr {

enum class ErrorCode {
  EmptyTrajectory,
  StepOutOfRange,
  UnverifiedExpert,
  MalformedTrajectory,
  DegenerateGroup,
  SupportMismatch,
  ConfigInvalid,
  FractionOutOfRange,
  MissingRecord,
  DuplicateRecord,
  StrategyInputMissing,
  SchemaViolation,
  IdMismatch,
  EmptyInput,
  ScoreOutOfRange,
  ClientError,
  IoError,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyTrajectory: return "EMPTY_TRAJECTORY";
    case ErrorCode::StepOutOfRange: return "STEP_OUT_OF_RANGE";
    case ErrorCode::UnverifiedExpert: return "UNVERIFIED_EXPERT";
    case ErrorCode::MalformedTrajectory: return "MALFORMED_TRAJECTORY";
    case ErrorCode::DegenerateGroup: return "DEGENERATE_GROUP";
    case ErrorCode::SupportMismatch: return "SUPPORT_MISMATCH";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::FractionOutOfRange: return "FRACTION_OUT_OF_RANGE";
    case ErrorCode::MissingRecord: return "MISSING_RECORD";
    case ErrorCode::DuplicateRecord: return "DUPLICATE_RECORD";
    case ErrorCode::StrategyInputMissing: return "STRATEGY_INPUT_MISSING";
    case ErrorCode::SchemaViolation: return "SCHEMA_VIOLATION";
    case ErrorCode::IdMismatch: return "ID_MISMATCH";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::ScoreOutOfRange: return "SCORE_OUT_OF_RANGE";
    case ErrorCode::ClientError: return "CLIENT_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

/// Library-wide exception; every thrown error carries a stable code so the
/// CLI can map it to an exit status and callers can branch without parsing
/// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tsr
