#include "cag/geometry.hpp"

#include <algorithm>
#include <string>

#include "cag/error.hpp"

namespace cag {

AxisSystem::AxisSystem(int alpha, int offset) : alpha_(alpha), offset_(0) {
  if (alpha < 2) throw Error(ErrorKind::InvalidArgument, "alpha must be at least 2");
  offset_ = wrap(offset);
}

int AxisSystem::wrap(long k) const noexcept {
  const long m = 2L * alpha_;
  return static_cast<int>(((k % m) + m) % m);
}

TurnPos AxisSystem::half_axis_point(long k) const {
  // H_k sits at standard angle pi*k/alpha, i.e. k/(2 alpha) turns anticlockwise.
  return TurnPos(ratio(-(k + offset_), 2L * alpha_));
}

AxisSystem AxisSystem::rotated(long k) const {
  return AxisSystem(alpha_, wrap(offset_ + k));
}

bool on_half_axis(const TurnPos& p, const AxisSystem& sys) {
  const Rational scaled = p.value() * sys.half_axis_count();
  return scaled.get_den() == 1;
}

int sector_of(const TurnPos& p, const AxisSystem& sys) {
  if (on_half_axis(p, sys)) {
    throw Error(ErrorKind::OnAxis, "point " + to_fraction_string(p.value()) + " is on a half-axis");
  }
  const Rational anticlockwise = mod_one(-p.value());
  const long original = floor_to_long(anticlockwise * sys.half_axis_count());
  return sys.wrap(original - sys.offset());
}

TurnPos image_point(const TurnPos& p, long j, const AxisSystem& sys) {
  return TurnPos(-p.value() - ratio(j + sys.offset(), sys.alpha()));
}

Arc image_arc(const Arc& a, long j, const AxisSystem& sys) {
  return Arc(image_point(a.r(), j, sys), image_point(a.l(), j, sys));
}

ProjValue proj_value(const TurnPos& p, long j, const AxisSystem& sys) {
  const Rational diff = clockwise_offset(sys.half_axis_point(j), p);
  const Rational other = 1 - diff;
  return ProjValue{diff <= other ? diff : other};
}

AxisInterval proj_interval(const Arc& a, long j, const AxisSystem& sys) {
  const ProjValue pl = proj_value(a.l(), j, sys);
  const ProjValue pr = proj_value(a.r(), j, sys);
  AxisInterval out{std::min(pl, pr), std::max(pl, pr)};
  if (arc_contains(a, sys.half_axis_point(j))) out.hi = ProjValue{Rational(0)};
  if (arc_contains(a, sys.half_axis_point(j + sys.alpha()))) out.lo = ProjValue{Rational(1, 2)};
  return out;
}

namespace {

struct Crossing {
  Rational from_right;
  int index;
};

std::vector<Crossing> crossings(const Arc& a, const AxisSystem& sys) {
  if (on_half_axis(a.l(), sys) || on_half_axis(a.r(), sys)) {
    throw Error(ErrorKind::OnAxis, "arc endpoint lies on a half-axis");
  }
  const Rational len = arc_length_turns(a);
  std::vector<Crossing> out;
  for (int k = 0; k < sys.half_axis_count(); ++k) {
    // Anticlockwise distance from r(a) back to the half-axis point.
    Rational back = clockwise_offset(sys.half_axis_point(k), a.r());
    if (back <= len) out.push_back({std::move(back), k});
  }
  std::sort(out.begin(), out.end(),
            [](const Crossing& x, const Crossing& y) { return x.from_right < y.from_right; });
  return out;
}

}  // namespace

std::vector<int> interception(const Arc& a, const AxisSystem& sys) {
  std::vector<int> out;
  for (const auto& c : crossings(a, sys)) out.push_back(c.index);
  return out;
}

int median_half_axis(const Arc& a, const AxisSystem& sys) {
  const auto list = interception(a, sys);
  if (list.empty()) throw Error(ErrorKind::EmptyInterception, "arc meets no half-axis");
  return list[(list.size() + 1) / 2 - 1];
}

std::pair<int, int> head_tail_sectors(const Arc& a, const AxisSystem& sys) {
  return {sector_of(a.l(), sys), sector_of(a.r(), sys)};
}

std::pair<Rational, Rational> head_tail_lengths(const Arc& a, const AxisSystem& sys) {
  const auto list = crossings(a, sys);
  if (list.empty()) throw Error(ErrorKind::EmptyInterception, "arc meets no half-axis");
  Rational tail = list.front().from_right;
  Rational head = arc_length_turns(a) - list.back().from_right;
  return {std::move(head), std::move(tail)};
}

}  // namespace cag
