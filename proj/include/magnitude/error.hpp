#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magnitude {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  NonzeroDiagonal,
  ZeroOffDiagonal,
  TriangleViolation,
  UnknownPoint,
  NoFiniteDistance,
  InvalidField,
  NotAComplex,
  ShapeMismatch,
  IdentityViolation,
  CompositionViolation,
  UnvalidatedModule,
  ResolutionTooShort,
  DimensionMismatch,
  RelationViolation,
  NotACocycle,
  SpaceMismatch,
  UnsupportedFormat,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every library operation. `witness` carries the labels
/// (points, grades, relation paths) that identify the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

}  // namespace magnitude
