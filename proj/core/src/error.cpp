#include "lipteich/error.hpp"

namespace lipteich {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CollarEmpty: return "CollarEmpty";
    case ErrorCode::PantsCase: return "PantsCase";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidFN: return "InvalidFN";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InsufficientCandidates: return "InsufficientCandidates";
    case ErrorCode::NotThin: return "NotThin";
    case ErrorCode::MismatchedSpace: return "MismatchedSpace";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::WriteError: return "WriteError";
  }
  return "Unknown";
}

}  // namespace lipteich
