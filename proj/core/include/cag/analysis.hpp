#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cag/model.hpp"

namespace cag {

/// One open gap between circularly consecutive endpoint positions, sampled at
/// its midpoint.
struct GapCount {
  TurnPos from;
  TurnPos to;
  TurnPos sample;
  std::size_t count;
};

struct SweepResult {
  std::size_t r_inf;
  TurnPos p_inf;
  std::vector<GapCount> gap_counts;
};

/// Minimum circular cover of a family. `cover` lists arc indices in
/// clockwise order starting from the first arc; L is unset when the arcs do
/// not cover the circle.
struct CoverResult {
  std::optional<std::vector<std::size_t>> cover;
  std::optional<std::size_t> L;

  bool covered() const noexcept { return L.has_value(); }
};

/// Clockwise ranks 1..2n of the endpoints, read from a start point.
struct SigmaOrder {
  std::vector<std::size_t> left_rank;
  std::vector<std::size_t> right_rank;
};

/// Indices of the arcs containing p.
std::vector<std::size_t> overlap_set(const ArcFamily& f, const TurnPos& p);

/// Distinct endpoint positions in clockwise order from 0 and the midpoint of
/// each gap between them (including the one wrapping past 0).
std::vector<GapCount> gap_samples(const ArcFamily& f);

/// Sweeps the circle once, counting the arcs over every gap between
/// consecutive endpoints. Throws Error(CoincidentEndpoints).
SweepResult sweep_overlap(const ArcFamily& f);

/// Throws Error(StartOnEndpoint). Endpoints sharing a position are ranked
/// left-before-right, then by vertex index.
SigmaOrder sigma_order(const ArcFamily& f, const TurnPos& start);

CoverResult min_circular_cover(const ArcFamily& f);

std::optional<TurnPos> uncovered_point(const ArcFamily& f);

/// Degree threshold floor(n(alpha-1)/(2alpha)) for the alpha-dimensional
/// degree construction.
long degree_bound(long n, long alpha);

/// Smallest alpha in [2, n] with delta < degree_bound(n, alpha).
std::optional<int> min_alpha_for_degree(long n, long delta);

std::size_t max_degree(const Graph& g);

}  // namespace cag
