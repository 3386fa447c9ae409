#include "cag/error.hpp"

namespace cag {

namespace {

constexpr std::string_view kNames[] = {
    "ParseError",         "FullCircleArc",     "PointArc",      "DegenerateFamily",
    "OnAxis",             "EmptyInterception", "CoincidentEndpoints",
    "StartOnEndpoint",    "CircleCovered",     "DegreeTooHigh", "CoverTooSmall",
    "NoThirdPoint",       "BadDimension",      "VertexMismatch", "TooLarge",
    "OddN",               "BadDivisibility",   "InvalidArgument", "VerificationFailed",
};

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  return kNames[static_cast<int>(kind)];
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace cag
