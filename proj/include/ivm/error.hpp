#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivm {

enum class ErrorCode {
  kSizeLimit,
  kParseError,
  kValidationError,
  kCountMismatch,
  kInvalidCert,
  kInvalidMatching,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every recoverable failure in the library. The
// code is the machine-checkable part; the message carries the locus.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ivm
