#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tough {

enum class ErrorCode {
  kParse,
  kOutOfRange,
  kInvalidArgument,
  kUnsupportedSize,
  kCompleteGraph,
  kNotConnected,
  kNoCertificate,
  kDecompositionUndefined,
  kInvalidTree,
};

std::string_view to_string(ErrorCode code);

/// Thrown by every library operation that rejects its input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tough
