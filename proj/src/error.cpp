#include "ixpgraph/error.hpp"

namespace ixpgraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotColocated: return "NotColocated";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kWrongNodeClass: return "WrongNodeClass";
    case ErrorCode::kUnknownTarget: return "UnknownTarget";
    case ErrorCode::kUncoverable: return "Uncoverable";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoLocationData: return "NoLocationData";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace ixpgraph
