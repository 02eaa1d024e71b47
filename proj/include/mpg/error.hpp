#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mpg {

enum class ErrorCode {
  NotAPermutation,
  TooSmall,
  LengthMismatch,
  ParseError,
  TooFewEdges,
  NoCycle,
  UnsupportedFormat,
  TooFewVertices,
  NotAnInducedP4,
  NotAC4ThroughE,
  NotTwins,
  DegenerateArc,
  PreconditionViolated,
  InternalInvariantViolated,
  OutOfScanRange,
  ExhaustedAttempts,
  InvalidK,
  IndexOutOfRange,
};

std::string_view code_name(ErrorCode code) noexcept;

/// Domain error. Every failure carries a machine-readable certificate
/// (the offending cycle, the failing step, the bad input entry, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json certificate = nlohmann::json::object())
      : std::runtime_error(message), code_(code), certificate_(std::move(certificate)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& certificate() const noexcept { return certificate_; }

  /// {"error": <code name>, "message": ..., "certificate": {...}}
  nlohmann::json to_json() const;

 private:
  ErrorCode code_;
  nlohmann::json certificate_;
};

}  // namespace mpg
