#include "cag/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cag/analysis.hpp"
#include "cag/error.hpp"
#include "cag/geometry.hpp"
#include "cag/oracle.hpp"

namespace cag {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::Interval, "interval"},
    {Method::Degree, "degree"},
    {Method::Overlap, "overlap"},
    {Method::Cover, "cover"},
    {Method::Auto, "auto"},
}};

Interval integer_interval(long lo, long hi) { return Interval{Rational(lo), Rational(hi)}; }

// Every dimension must be a supergraph of G and their intersection must be
// exactly G; anything else is a bug in the construction.
BoxRep checked(BoxRep rep, const ArcFamily& f, std::string_view method) {
  const Graph g = intersection_graph(f);
  for (std::size_t d = 0; d < rep.dims(); ++d) {
    const Graph layer = graph_of_dimension(rep, d);
    for (const auto& [u, v] : g.edges()) {
      if (!layer.adjacent(u, v)) {
        throw Error(ErrorKind::VerificationFailed,
                    std::string(method) + ": dimension " + std::to_string(d) + " drops edge " +
                        g.vertices()[u] + "-" + g.vertices()[v]);
      }
    }
  }
  const auto report = verify(rep, g);
  if (!report.ok) {
    throw Error(ErrorKind::VerificationFailed,
                std::string(method) + ": intersection differs from G (" +
                    std::to_string(report.missing_edges.size()) + " missing, " +
                    std::to_string(report.extra_edges.size()) + " extra)");
  }
  return rep;
}

// One dimension of sigma ranks from `start`; arcs over `start` get [1, 2n].
std::vector<Interval> sigma_dimension(const ArcFamily& f, const TurnPos& start) {
  const auto sigma = sigma_order(f, start);
  const long two_n = 2 * static_cast<long>(f.size());
  std::vector<Interval> column;
  column.reserve(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    const long l = static_cast<long>(sigma.left_rank[v]);
    const long r = static_cast<long>(sigma.right_rank[v]);
    column.push_back(l < r ? integer_interval(l, r) : integer_interval(1, two_n));
  }
  return column;
}

// Midpoint of the gap that ends at `pos` (the gap just anticlockwise of it).
TurnPos point_before(const ArcFamily& f, const TurnPos& pos) {
  for (const auto& gap : gap_samples(f)) {
    if (gap.to == pos) return gap.sample;
  }
  throw Error(ErrorKind::InvalidArgument, "position is not an arc endpoint");
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::none_of(a.begin(), a.end(),
                      [&](std::size_t x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

void require_distinct(const ArcFamily& f, std::string_view method) {
  if (!endpoints_distinct(f)) {
    throw Error(ErrorKind::CoincidentEndpoints,
                std::string(method) + " needs pairwise distinct endpoints; normalize first");
  }
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [method, text] : kMethodNames) {
    if (text == name) return method;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

BoxRep build_interval_case(const ArcFamily& f) {
  const auto p = uncovered_point(f);
  if (!p) throw Error(ErrorKind::CircleCovered, "every point of the circle lies on some arc");
  BoxRep rep{f.vertices(), {sigma_dimension(f, *p)}};
  return checked(std::move(rep), f, "interval");
}

BoxRep build_degree(const ArcFamily& f, int alpha) {
  if (alpha < 2) throw Error(ErrorKind::InvalidArgument, "alpha must be at least 2");
  const long n = static_cast<long>(f.size());
  const long delta = static_cast<long>(max_degree(intersection_graph(f)));
  const long bound = degree_bound(n, alpha);
  if (delta >= bound) {
    throw Error(ErrorKind::DegreeTooHigh, "max degree " + std::to_string(delta) +
                                              " is not below floor(n(alpha-1)/(2alpha)) = " +
                                              std::to_string(bound));
  }
  const ArcFamily normal = normalize(f, alpha);
  const AxisSystem sys(alpha);
  BoxRep rep{f.vertices(), {}};
  for (int j = 0; j < alpha; ++j) {
    std::vector<Interval> column;
    column.reserve(normal.size());
    for (const auto& arc : normal.arcs()) {
      const AxisInterval iv = proj_interval(arc, j, sys);
      column.push_back(Interval{iv.lo.coordinate(), iv.hi.coordinate()});
    }
    rep.intervals.push_back(std::move(column));
  }
  return checked(std::move(rep), f, "degree");
}

BoxRep build_overlap(const ArcFamily& f) {
  require_distinct(f, "overlap");
  const auto sweep = sweep_overlap(f);
  const auto witnesses = overlap_set(f, sweep.p_inf);
  const Graph g = intersection_graph(f);

  BoxRep rep{f.vertices(), {}};
  for (const std::size_t w : witnesses) {
    std::vector<Interval> column;
    column.reserve(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (v == w) {
        column.push_back(integer_interval(0, 1));
      } else if (g.adjacent(v, w)) {
        column.push_back(integer_interval(1, 2));
      } else {
        column.push_back(integer_interval(2, 3));
      }
    }
    rep.intervals.push_back(std::move(column));
  }
  rep.intervals.push_back(sigma_dimension(f, sweep.p_inf));
  return checked(std::move(rep), f, "overlap");
}

BoxRep build_cover(const ArcFamily& f) {
  const auto cover = min_circular_cover(f);
  if (cover.covered() && *cover.L <= 4) {
    throw Error(ErrorKind::CoverTooSmall,
                "circular cover number " + std::to_string(*cover.L) + " is not above 4");
  }
  require_distinct(f, "cover");
  std::array<TurnPos, 3> points;
  if (!cover.covered()) {
    // No circular cover at all: an uncovered point has an empty overlap set
    // and serves as all three points.
    const TurnPos p = *uncovered_point(f);
    points = {p, p, p};
  } else {
    auto arcs = *cover.cover;
    const TurnPos origin = f[arcs.front()].l();
    std::sort(arcs.begin(), arcs.end(), [&](std::size_t a, std::size_t b) {
      return clockwise_offset(origin, f[a].l()) < clockwise_offset(origin, f[b].l());
    });
    points[0] = point_before(f, f[arcs[0]].l());
    points[1] = point_before(f, f[arcs[1]].r());
    const auto o0 = overlap_set(f, points[0]);
    const auto o1 = overlap_set(f, points[1]);
    if (!disjoint(o0, o1)) {
      throw Error(ErrorKind::NoThirdPoint, "overlap sets of the first two points intersect");
    }
    bool found = false;
    for (const auto& gap : gap_samples(f)) {
      const auto o2 = overlap_set(f, gap.sample);
      if (disjoint(o2, o0) && disjoint(o2, o1)) {
        points[2] = gap.sample;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::NoThirdPoint, "no point avoids both overlap sets");
  }

  BoxRep rep{f.vertices(), {}};
  for (const auto& p : points) rep.intervals.push_back(sigma_dimension(f, p));
  return checked(std::move(rep), f, "cover");
}

AutoResult build_auto_detailed(const ArcFamily& f) {
  const ArcFamily distinct = endpoints_distinct(f) ? f : normalize(f, 2);
  const long n = static_cast<long>(f.size());
  const long delta = static_cast<long>(max_degree(intersection_graph(f)));
  const auto cover = min_circular_cover(distinct);
  const auto alpha = min_alpha_for_degree(n, delta);

  std::vector<Candidate> candidates;
  std::optional<BoxRep> best;
  Method chosen = Method::Overlap;
  auto consider = [&](Method method, bool applicable, std::string note, auto&& build) {
    Candidate c{method, applicable, std::nullopt, std::move(note)};
    if (applicable) {
      BoxRep rep = build();
      c.dims = rep.dims();
      if (!best || rep.dims() < best->dims()) {
        best = std::move(rep);
        chosen = method;
      }
    }
    candidates.push_back(std::move(c));
  };

  consider(Method::Interval, !cover.covered(),
           cover.covered() ? "circle is covered" : "uncovered point exists",
           [&] { return build_interval_case(distinct); });
  consider(Method::Cover, !cover.covered() || *cover.L > 4,
           cover.covered() ? "L = " + std::to_string(*cover.L) : "L = inf",
           [&] { return build_cover(distinct); });
  consider(Method::Overlap, true, "always applicable", [&] { return build_overlap(distinct); });
  consider(Method::Degree, alpha.has_value(),
           alpha ? "alpha = " + std::to_string(*alpha)
                 : "max degree " + std::to_string(delta) + " too high for any alpha",
           [&] { return build_degree(f, alpha.value_or(2)); });

  return AutoResult{std::move(*best), chosen, std::move(candidates)};
}

BoxRep build_auto(const ArcFamily& f) { return build_auto_detailed(f).rep; }

}  // namespace cag
