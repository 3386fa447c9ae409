#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cag/rational.hpp"

namespace cag {

/// A point on the unit circle, in turns measured clockwise from the
/// reference point R0 (where the positive x-axis meets the circle).
/// The value is always reduced into [0, 1).
class TurnPos {
 public:
  TurnPos() = default;
  explicit TurnPos(const Rational& turns) : value_(mod_one(turns)) {}
  TurnPos(long num, long den) : TurnPos(ratio(num, den)) {}

  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const TurnPos& a, const TurnPos& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const TurnPos& a, const TurnPos& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  Rational value_{0};
};

/// Clockwise distance in turns from `from` to `to`, in [0, 1).
Rational clockwise_offset(const TurnPos& from, const TurnPos& to);

/// Closed arc swept clockwise from the left endpoint to the right endpoint.
class Arc {
 public:
  /// Throws Error(PointArc) when l == r.
  Arc(TurnPos l, TurnPos r);

  const TurnPos& l() const noexcept { return l_; }
  const TurnPos& r() const noexcept { return r_; }

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  TurnPos l_;
  TurnPos r_;
};

/// Simple undirected graph over labelled vertices, stored as a dense
/// adjacency matrix. Vertex order is significant (indices align with the
/// arc family or box representation it came from).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * size() + v] != 0; }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;
  /// Edges as index pairs (u < v), lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::pair<std::size_t, std::size_t>> non_edges() const;

  static Graph complete(std::vector<std::string> vertices);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<char> adj_;
};

/// The circular-arc representation: one arc per labelled vertex.
class ArcFamily {
 public:
  /// Throws Error(DegenerateFamily) when fewer than two arcs are given or
  /// the label and arc lists differ in length.
  ArcFamily(std::vector<std::string> vertices, std::vector<Arc> arcs);

  std::size_t size() const noexcept { return arcs_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& operator[](std::size_t i) const { return arcs_[i]; }

  friend bool operator==(const ArcFamily&, const ArcFamily&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
};

bool arc_contains(const Arc& a, const TurnPos& p);
bool arc_intersects(const Arc& a, const Arc& b);
Rational arc_length_turns(const Arc& a);

Graph intersection_graph(const ArcFamily& f);

/// True when no two of the 2n endpoints share a position.
bool endpoints_distinct(const ArcFamily& f);

/// Checks the three normal-form properties: distinct endpoints, left
/// endpoints spaced exactly 1/n apart, and no endpoint on a half-axis of the
/// alpha-axis system.
bool is_normalized(const ArcFamily& f, int alpha);

/// Returns an equivalent family (same intersection graph, same vertex order)
/// in normal form for `alpha`. Coincident endpoints are separated with all
/// left endpoints ahead of all right endpoints at each shared position.
ArcFamily normalize(const ArcFamily& f, int alpha);

/// Returns the family rotated clockwise by `turns`.
ArcFamily rotate(const ArcFamily& f, const Rational& turns);

}  // namespace cag
