#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cag/box_rep.hpp"
#include "cag/model.hpp"

namespace cag {

struct VerifyReport {
  bool ok = true;
  /// Edges of the target graph absent from the intersection (index pairs into g).
  std::vector<std::pair<std::size_t, std::size_t>> missing_edges;
  /// Edges of the intersection absent from the target graph.
  std::vector<std::pair<std::size_t, std::size_t>> extra_edges;
};

/// Interval graph of one dimension (closed intervals; touching counts).
/// Throws Error(BadDimension).
Graph graph_of_dimension(const BoxRep& rep, std::size_t d);

/// Intersection of all dimensions; the complete graph when dims == 0.
Graph represented_graph(const BoxRep& rep);

/// Compares the represented graph with g. Vertices are matched by label, so
/// the two lists may be permuted; throws Error(VertexMismatch) when the
/// label sets differ.
VerifyReport verify(const BoxRep& rep, const Graph& g);

struct OracleLimits {
  std::size_t max_vertices = 8;
  std::size_t max_non_edges = 16;
};

/// Interval-graph test by search for a vertex order where u < v < w and
/// u ~ w imply u ~ v. Throws Error(TooLarge) past limits.max_vertices.
bool is_interval(const Graph& g, const OracleLimits& limits = {});

/// Exact boxicity: the fewest interval supergraphs whose intersection is g.
/// The complete graph has boxicity 0. Throws Error(TooLarge).
int boxicity_exact(const Graph& g, const OracleLimits& limits = {});

}  // namespace cag
