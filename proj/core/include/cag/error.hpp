#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cag {

enum class ErrorKind {
  ParseError,
  FullCircleArc,
  PointArc,
  DegenerateFamily,
  OnAxis,
  EmptyInterception,
  CoincidentEndpoints,
  StartOnEndpoint,
  CircleCovered,
  DegreeTooHigh,
  CoverTooSmall,
  NoThirdPoint,
  BadDimension,
  VertexMismatch,
  TooLarge,
  OddN,
  BadDivisibility,
  InvalidArgument,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cag
