#pragma once

#include <stdexcept>
#include <string>

namespace rotkit {

enum class ErrorCode {
  OutOfDomain,
  WrongPointKind,
  InvalidParameters,
  NotSelfMap,
  EmptyDomain,
  NoConvergence,
  NoSignChange,
  NotFound,
  InvalidRate,
  NotApplicable,
  NotMonotone,
  GenerationExhausted,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::WrongPointKind: return "WrongPointKind";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotSelfMap: return "NotSelfMap";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidRate: return "InvalidRate";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rotkit
