#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ixpgraph {

enum class ErrorCode {
  kUnknownEndpoint,
  kUnknownNode,
  kEmptyGraph,
  kIoError,
  kFormatError,
  kDisconnected,
  kNotColocated,
  kInsufficientData,
  kWrongNodeClass,
  kUnknownTarget,
  kUncoverable,
  kTooLarge,
  kNoLocationData,
  kMissingAttribute,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All domain failures raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ixpgraph
