#include "mta/error.hpp"

namespace mta {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::AlphabetOutOfRange: return "AlphabetOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GenerationMismatch: return "GenerationMismatch";
    case ErrorCode::TemplateAlreadyCaptured: return "TemplateAlreadyCaptured";
    case ErrorCode::NegativeThreshold: return "NegativeThreshold";
    case ErrorCode::DegenerateDistance: return "DegenerateDistance";
    case ErrorCode::ZeroRuntime: return "ZeroRuntime";
    case ErrorCode::LengthNotMultiple: return "LengthNotMultiple";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mta
