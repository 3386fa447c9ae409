#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cag/model.hpp"
#include "cag/rational.hpp"

namespace cag {

struct Interval {
  Rational lo;
  Rational hi;

  bool intersects(const Interval& other) const { return !(hi < other.lo || other.hi < lo); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// k interval graphs over the same vertex list; `intervals[d][v]` is the
/// closed interval of vertex v in dimension d. Zero dimensions stand for
/// the complete graph.
struct BoxRep {
  std::vector<std::string> vertices;
  std::vector<std::vector<Interval>> intervals;

  std::size_t dims() const noexcept { return intervals.size(); }

  friend bool operator==(const BoxRep&, const BoxRep&) = default;
};

}  // namespace cag
