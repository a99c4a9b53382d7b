#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace confspec {

enum class ErrorCode {
  NonManifoldEdge,
  DegenerateFace,
  DisconnectedMesh,
  IndexOutOfRange,
  NonpositiveScale,
  NoAntipodalPairing,
  SelfMappedFace,
  DomainRadiusViolation,
  CenterOnSurface,
  InversionPole,
  InvalidConformalMap,
  SizeMismatch,
  ZeroVector,
  ConvergenceFailure,
  InsufficientSpectrum,
  NotCentered,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace confspec
