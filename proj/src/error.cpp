#include "tough/error.hpp"

namespace tough {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUnsupportedSize: return "UNSUPPORTED_SIZE";
    case ErrorCode::kCompleteGraph: return "COMPLETE_GRAPH";
    case ErrorCode::kNotConnected: return "NOT_CONNECTED";
    case ErrorCode::kNoCertificate: return "NO_CERTIFICATE";
    case ErrorCode::kDecompositionUndefined: return "DECOMPOSITION_UNDEFINED";
    case ErrorCode::kInvalidTree: return "INVALID_TREE";
  }
  return "UNKNOWN";
}

}  // namespace tough
