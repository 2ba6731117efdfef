#include "ivm/error.hpp"

namespace ivm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSizeLimit: return "SIZE_LIMIT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kValidationError: return "VALIDATION_ERROR";
    case ErrorCode::kCountMismatch: return "COUNT_MISMATCH";
    case ErrorCode::kInvalidCert: return "INVALID_CERT";
    case ErrorCode::kInvalidMatching: return "INVALID_MATCHING";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace ivm
