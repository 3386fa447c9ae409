#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "cag/model.hpp"
#include "cag/rational.hpp"

namespace cag {

// The reference-axis system for a given alpha: alpha lines through the
// origin at standard angles pi*j/alpha, giving 2*alpha half-axes H_k and
// 2*alpha sectors S_k (S_k lies between H_k and H_{k+1}, anticlockwise).
//
// `offset` relabels the system without moving any arc: index k in this
// frame names original half-axis H_{k+offset}. Rotating so that some
// half-axis H_m becomes H_0 is `sys.rotated(m)`.
class AxisSystem {
 public:
  /// Throws Error(InvalidArgument) for alpha < 2.
  explicit AxisSystem(int alpha, int offset = 0);

  int alpha() const noexcept { return alpha_; }
  int offset() const noexcept { return offset_; }
  int half_axis_count() const noexcept { return 2 * alpha_; }

  /// Frame index reduced into [0, 2*alpha).
  int wrap(long k) const noexcept;

  /// Circle point of half-axis H_k (frame index, any integer).
  TurnPos half_axis_point(long k) const;

  /// Same circle, renumbered so that frame half-axis `k` becomes H_0.
  AxisSystem rotated(long k) const;

 private:
  int alpha_;
  int offset_;
};

/// Projection onto a reference axis, stored as the folded circular distance
/// d in [0, 1/2] between the point and the axis's positive half-axis point.
/// Ordering is reversed in d: d = 0 is the largest projection (+1), d = 1/2
/// the smallest (-1). cos(2*pi*d) is strictly decreasing there, so this is
/// the exact order of the real projections.
struct ProjValue {
  Rational d;

  /// Order-preserving rational coordinate for serialisation: 1/2 - d.
  Rational coordinate() const { return Rational(1, 2) - d; }

  friend bool operator==(const ProjValue& a, const ProjValue& b) { return a.d == b.d; }
  friend std::strong_ordering operator<=>(const ProjValue& a, const ProjValue& b) {
    return cmp(b.d, a.d) <=> 0;
  }
};

/// Closed interval [lo, hi] on one reference axis.
struct AxisInterval {
  ProjValue lo;
  ProjValue hi;

  bool intersects(const AxisInterval& other) const {
    return !(hi < other.lo || other.hi < lo);
  }
};

bool on_half_axis(const TurnPos& p, const AxisSystem& sys);

/// Sector index (in the frame of `sys`) containing p. Throws Error(OnAxis).
int sector_of(const TurnPos& p, const AxisSystem& sys);

/// Reflection of p across reference axis A_j. An involution.
TurnPos image_point(const TurnPos& p, long j, const AxisSystem& sys);

/// Reflection of an arc across A_j; the endpoints swap roles.
Arc image_arc(const Arc& a, long j, const AxisSystem& sys);

ProjValue proj_value(const TurnPos& p, long j, const AxisSystem& sys);

/// [inf, sup] of the projection of the whole arc onto A_j.
AxisInterval proj_interval(const Arc& a, long j, const AxisSystem& sys);

/// Half-axes met by the arc, listed in the order seen when walking the arc
/// anticlockwise from r(a) to l(a). Throws Error(OnAxis) if an endpoint
/// lies on a half-axis.
std::vector<int> interception(const Arc& a, const AxisSystem& sys);

/// The ceil(t/2)-th entry of the interception list.
/// Throws Error(EmptyInterception).
int median_half_axis(const Arc& a, const AxisSystem& sys);

/// (sector of l(a), sector of r(a)).
std::pair<int, int> head_tail_sectors(const Arc& a, const AxisSystem& sys);

/// Lengths in turns of the arc's parts inside its head and tail sectors.
/// Requires a non-empty interception list (Error(EmptyInterception)).
std::pair<Rational, Rational> head_tail_lengths(const Arc& a, const AxisSystem& sys);

}  // namespace cag
