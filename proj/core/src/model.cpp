#include "cag/model.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cag/error.hpp"

namespace cag {

Rational clockwise_offset(const TurnPos& from, const TurnPos& to) {
  return mod_one(to.value() - from.value());
}

Arc::Arc(TurnPos l, TurnPos r) : l_(std::move(l)), r_(std::move(r)) {
  if (l_ == r_) {
    throw Error(ErrorKind::PointArc,
                "arc endpoints coincide at " + to_fraction_string(l_.value()));
  }
}

Graph::Graph(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)), adj_(vertices_.size() * vertices_.size(), 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u * size() + v] = 1;
  adj_[v * size() + u] = 1;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  adj_[u * size() + v] = 0;
  adj_[v * size() + u] = 0;
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < size(); ++v) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < size(); ++u) total += degree(u);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::non_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (!adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complete(std::vector<std::string> vertices) {
  Graph g(std::move(vertices));
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) g.add_edge(u, v);
  }
  return g;
}

ArcFamily::ArcFamily(std::vector<std::string> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  if (vertices_.size() != arcs_.size()) {
    throw Error(ErrorKind::DegenerateFamily, "vertex and arc counts differ");
  }
  if (arcs_.size() < 2) {
    throw Error(ErrorKind::DegenerateFamily, "a family needs at least two arcs");
  }
}

bool arc_contains(const Arc& a, const TurnPos& p) {
  return clockwise_offset(a.l(), p) <= clockwise_offset(a.l(), a.r());
}

bool arc_intersects(const Arc& a, const Arc& b) {
  // Two closed arcs meet iff one of them holds the other's left endpoint.
  return arc_contains(a, b.l()) || arc_contains(b, a.l());
}

Rational arc_length_turns(const Arc& a) { return clockwise_offset(a.l(), a.r()); }

Graph intersection_graph(const ArcFamily& f) {
  Graph g(f.vertices());
  for (std::size_t u = 0; u < f.size(); ++u) {
    for (std::size_t v = u + 1; v < f.size(); ++v) {
      if (arc_intersects(f[u], f[v])) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

struct Endpoint {
  TurnPos pos;
  bool is_right;
  std::size_t vertex;
};

// Clockwise order from 0; at a shared position lefts come first, then by
// vertex index.
std::vector<Endpoint> sorted_endpoints(const ArcFamily& f) {
  std::vector<Endpoint> ends;
  ends.reserve(2 * f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    ends.push_back({f[v].l(), false, v});
    ends.push_back({f[v].r(), true, v});
  }
  std::sort(ends.begin(), ends.end(), [](const Endpoint& a, const Endpoint& b) {
    return std::tie(a.pos, a.is_right, a.vertex) < std::tie(b.pos, b.is_right, b.vertex);
  });
  return ends;
}

bool on_any_half_axis(const TurnPos& p, int alpha) {
  const Rational scaled = p.value() * (2 * alpha);
  return scaled.get_den() == 1;
}

}  // namespace

bool endpoints_distinct(const ArcFamily& f) {
  const auto ends = sorted_endpoints(f);
  for (std::size_t i = 1; i < ends.size(); ++i) {
    if (ends[i].pos == ends[i - 1].pos) return false;
  }
  return true;
}

bool is_normalized(const ArcFamily& f, int alpha) {
  if (!endpoints_distinct(f)) return false;
  std::vector<TurnPos> lefts;
  for (const auto& a : f.arcs()) {
    lefts.push_back(a.l());
    if (on_any_half_axis(a.l(), alpha) || on_any_half_axis(a.r(), alpha)) return false;
  }
  std::sort(lefts.begin(), lefts.end());
  const Rational step(1, static_cast<long>(f.size()));
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    if (clockwise_offset(lefts[i], lefts[(i + 1) % lefts.size()]) != step) return false;
  }
  return true;
}

ArcFamily rotate(const ArcFamily& f, const Rational& turns) {
  std::vector<Arc> arcs;
  arcs.reserve(f.size());
  for (const auto& a : f.arcs()) {
    arcs.emplace_back(TurnPos(a.l().value() + turns), TurnPos(a.r().value() + turns));
  }
  return ArcFamily(f.vertices(), std::move(arcs));
}

ArcFamily normalize(const ArcFamily& f, int alpha) {
  if (alpha < 2) throw Error(ErrorKind::InvalidArgument, "alpha must be at least 2");
  if (is_normalized(f, alpha)) return f;

  const std::size_t n = f.size();
  auto ends = sorted_endpoints(f);
  const auto first_left =
      std::find_if(ends.begin(), ends.end(), [](const Endpoint& e) { return !e.is_right; });
  std::rotate(ends.begin(), first_left, ends.end());

  std::vector<Rational> left(n), right(n);
  const long ln = static_cast<long>(n);
  long gap = -1;
  std::size_t i = 0;
  while (i < ends.size()) {
    // ends[i] is a left endpoint: it opens gap `gap`.
    ++gap;
    left[ends[i].vertex] = ratio(gap, ln);
    std::size_t j = i + 1;
    while (j < ends.size() && ends[j].is_right) ++j;
    const long count = static_cast<long>(j - i - 1);
    for (long k = 1; k <= count; ++k) {
      right[ends[i + static_cast<std::size_t>(k)].vertex] =
          ratio(gap, ln) + ratio(k, ln * (count + 1));
    }
    i = j;
  }

  bool hits_axis = false;
  mpz_class denom_lcm = 1;
  for (std::size_t v = 0; v < n; ++v) {
    for (const Rational* pos : {&left[v], &right[v]}) {
      hits_axis = hits_axis || on_any_half_axis(TurnPos(*pos), alpha);
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), pos->get_den_mpz_t());
    }
  }
  Rational shift = 0;
  if (hits_axis) {
    // Every endpoint is a multiple of 1/D; after adding 1/(8 n alpha D) the
    // numerator over 8 n alpha D is odd, while every half-axis point has an
    // even one.
    shift = Rational(mpz_class(1), mpz_class(8 * ln * alpha) * denom_lcm);
  }

  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    arcs.emplace_back(TurnPos(left[v] + shift), TurnPos(right[v] + shift));
  }
  return ArcFamily(f.vertices(), std::move(arcs));
}

}  // namespace cag
