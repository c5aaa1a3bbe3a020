#pragma once

#include <stdexcept>
#include <string>

namespace mta {

enum class ErrorCode {
  SeriesTooShort,
  ZeroVariance,
  NonFiniteValue,
  AlphabetOutOfRange,
  IndexOutOfRange,
  GenerationMismatch,
  TemplateAlreadyCaptured,
  NegativeThreshold,
  DegenerateDistance,
  ZeroRuntime,
  LengthNotMultiple,
  OverlapError,
  OutOfBounds,
  ConfigInvalid,
  IoError,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class MtaError : public std::runtime_error {
 public:
  MtaError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mta
