#include "mpg/error.hpp"

namespace mpg {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotAnInducedP4: return "NotAnInducedP4";
    case ErrorCode::NotAC4ThroughE: return "NotAC4ThroughE";
    case ErrorCode::NotTwins: return "NotTwins";
    case ErrorCode::DegenerateArc: return "DegenerateArc";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalInvariantViolated: return "InternalInvariantViolated";
    case ErrorCode::OutOfScanRange: return "OutOfScanRange";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

nlohmann::json Error::to_json() const {
  return {{"error", std::string(code_name(code_))},
          {"message", what()},
          {"certificate", certificate_}};
}

}  // namespace mpg
