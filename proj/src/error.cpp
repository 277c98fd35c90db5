#include "polyherm/error.hpp"

namespace polyherm {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::TauOutOfRange: return "TauOutOfRange";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::SingularR: return "SingularR";
    case ErrorCode::NodesOutOfRange: return "NodesOutOfRange";
    case ErrorCode::EigensolveFailure: return "EigensolveFailure";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::SchemaIncompatible: return "SchemaIncompatible";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace polyherm
