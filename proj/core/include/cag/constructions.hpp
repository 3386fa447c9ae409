#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cag/box_rep.hpp"
#include "cag/model.hpp"

namespace cag {

enum class Method { Interval, Degree, Overlap, Cover, Auto };

std::string_view to_string(Method m) noexcept;
/// Throws Error(InvalidArgument) for unknown names.
Method parse_method(std::string_view name);

// Every builder checks its result against the family's intersection graph
// before returning and throws Error(VerificationFailed) on any mismatch.

/// One dimension: sigma ranks read from a point no arc covers.
/// Throws Error(CircleCovered).
BoxRep build_interval_case(const ArcFamily& f);

/// alpha dimensions from the projections of each arc onto the reference
/// axes. The family is brought into normal form for alpha first when it is
/// not already. Throws Error(DegreeTooHigh) unless
/// max degree < floor(n(alpha-1)/(2alpha)).
BoxRep build_degree(const ArcFamily& f, int alpha);

/// r_inf(F) + 1 dimensions: a 0/1/2/3 ladder per arc through the minimum
/// overlap point, plus the sigma ranks from that point.
/// Throws Error(CoincidentEndpoints).
BoxRep build_overlap(const ArcFamily& f);

/// Three dimensions from three points whose overlap sets are pairwise
/// disjoint. Throws Error(CoverTooSmall) unless L(F) > 4, and
/// Error(CoincidentEndpoints).
BoxRep build_cover(const ArcFamily& f);

struct Candidate {
  Method method;
  bool applicable;
  std::optional<std::size_t> dims;
  std::string note;
};

struct AutoResult {
  BoxRep rep;
  Method chosen;
  std::vector<Candidate> candidates;
};

/// Runs every applicable builder on the normal form of f and keeps the one
/// with the fewest dimensions; ties go interval, cover, overlap, degree.
AutoResult build_auto_detailed(const ArcFamily& f);
BoxRep build_auto(const ArcFamily& f);

}  // namespace cag
