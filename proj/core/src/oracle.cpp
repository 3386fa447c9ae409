#include "cag/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "cag/error.hpp"

namespace cag {

Graph graph_of_dimension(const BoxRep& rep, std::size_t d) {
  if (d >= rep.dims()) {
    throw Error(ErrorKind::BadDimension,
                "dimension " + std::to_string(d) + " out of range (dims = " +
                    std::to_string(rep.dims()) + ")");
  }
  const auto& column = rep.intervals[d];
  Graph g(rep.vertices);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (column[u].intersects(column[v])) g.add_edge(u, v);
    }
  }
  return g;
}

Graph represented_graph(const BoxRep& rep) {
  Graph g = Graph::complete(rep.vertices);
  for (std::size_t d = 0; d < rep.dims(); ++d) {
    const auto& column = rep.intervals[d];
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (!column[u].intersects(column[v])) g.remove_edge(u, v);
      }
    }
  }
  return g;
}

VerifyReport verify(const BoxRep& rep, const Graph& g) {
  if (rep.vertices.size() != g.size()) {
    throw Error(ErrorKind::VertexMismatch, "representation has " +
                                               std::to_string(rep.vertices.size()) +
                                               " vertices, graph has " + std::to_string(g.size()));
  }
  for (const auto& column : rep.intervals) {
    if (column.size() != rep.vertices.size()) {
      throw Error(ErrorKind::VertexMismatch, "dimension with wrong number of intervals");
    }
  }
  std::map<std::string, std::size_t> index_in_g;
  for (std::size_t i = 0; i < g.size(); ++i) index_in_g.emplace(g.vertices()[i], i);
  std::vector<std::size_t> to_g(rep.vertices.size());
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
    const auto it = index_in_g.find(rep.vertices[i]);
    if (it == index_in_g.end() || seen[it->second]) {
      throw Error(ErrorKind::VertexMismatch, "vertex '" + rep.vertices[i] + "' not matched");
    }
    seen[it->second] = true;
    to_g[i] = it->second;
  }

  const Graph h = represented_graph(rep);
  VerifyReport report;
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = a + 1; b < h.size(); ++b) {
      const auto ga = std::min(to_g[a], to_g[b]);
      const auto gb = std::max(to_g[a], to_g[b]);
      const bool want = g.adjacent(ga, gb);
      const bool have = h.adjacent(a, b);
      if (want && !have) report.missing_edges.emplace_back(ga, gb);
      if (!want && have) report.extra_edges.emplace_back(ga, gb);
    }
  }
  std::sort(report.missing_edges.begin(), report.missing_edges.end());
  std::sort(report.extra_edges.begin(), report.extra_edges.end());
  report.ok = report.missing_edges.empty() && report.extra_edges.empty();
  return report;
}

namespace {

using Mask = std::uint32_t;

// Searches for a vertex order with: u < v < w and u ~ w imply u ~ v.
// A placed vertex stays "open" while it is adjacent to everything placed
// after it; a new vertex may only be adjacent to open vertices. Feasibility
// of the remainder depends only on (placed, open), so dead states are
// memoised with a generation stamp shared across calls.
class IntervalOrderSearch {
 public:
  explicit IntervalOrderSearch(std::size_t n) : n_(n), dead_(std::size_t{1} << (2 * n), 0) {}

  bool run(const std::vector<Mask>& nbrs) {
    nbrs_ = &nbrs;
    ++generation_;
    if (generation_ == 0) {
      std::fill(dead_.begin(), dead_.end(), 0);
      generation_ = 1;
    }
    return extend(0, 0);
  }

 private:
  bool extend(Mask placed, Mask open) {
    const Mask all = static_cast<Mask>((Mask{1} << n_) - 1);
    if (placed == all) return true;
    auto& stamp = dead_[(static_cast<std::size_t>(placed) << n_) | open];
    if (stamp == generation_) return false;
    for (std::size_t w = 0; w < n_; ++w) {
      const Mask bit = Mask{1} << w;
      if (placed & bit) continue;
      const Mask nw = (*nbrs_)[w];
      if ((nw & placed & ~open) != 0) continue;
      if (extend(placed | bit, (open & nw) | bit)) return true;
    }
    stamp = generation_;
    return false;
  }

  std::size_t n_;
  const std::vector<Mask>* nbrs_ = nullptr;
  std::vector<std::uint32_t> dead_;
  std::uint32_t generation_ = 0;
};

std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> out(g.size(), 0);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.adjacent(u, v)) out[u] |= Mask{1} << v;
    }
  }
  return out;
}

void check_vertex_limit(const Graph& g, const OracleLimits& limits) {
  // The memo table is 4^n entries; 12 is the hard ceiling regardless of limits.
  if (g.size() > limits.max_vertices || g.size() > 12) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.size()) + " vertices exceeds the limit of " +
                                         std::to_string(std::min<std::size_t>(limits.max_vertices, 12)));
  }
}

using CoverMask = std::uint64_t;

// Can `uncovered` be covered by at most `budget` of the candidate sets?
bool coverable(CoverMask uncovered, int budget, const std::vector<CoverMask>& sets,
               std::map<std::pair<CoverMask, int>, bool>& memo) {
  if (uncovered == 0) return true;
  if (budget == 0) return false;
  const auto key = std::make_pair(uncovered, budget);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const CoverMask lowest = uncovered & (~uncovered + 1);
  bool ok = false;
  for (const CoverMask s : sets) {
    if ((s & lowest) && coverable(uncovered & ~s, budget - 1, sets, memo)) {
      ok = true;
      break;
    }
  }
  memo.emplace(key, ok);
  return ok;
}

}  // namespace

bool is_interval(const Graph& g, const OracleLimits& limits) {
  check_vertex_limit(g, limits);
  if (g.size() == 0) return true;
  IntervalOrderSearch search(g.size());
  return search.run(neighbour_masks(g));
}

int boxicity_exact(const Graph& g, const OracleLimits& limits) {
  check_vertex_limit(g, limits);
  const auto non_edges = g.non_edges();
  const std::size_t m = non_edges.size();
  if (m > limits.max_non_edges || m > 24) {
    throw Error(ErrorKind::TooLarge, std::to_string(m) + " non-edges exceeds the limit of " +
                                         std::to_string(std::min<std::size_t>(limits.max_non_edges, 24)));
  }
  if (m == 0) return 0;

  // Each interval supergraph leaves some subset of g's non-edges in place;
  // boxicity is the fewest such subsets that together contain every non-edge.
  const auto base = neighbour_masks(g);
  const CoverMask full = (CoverMask{1} << m) - 1;
  IntervalOrderSearch search(g.size());
  std::vector<CoverMask> sets;
  for (CoverMask added = 0; added <= full; ++added) {
    auto nbrs = base;
    for (std::size_t e = 0; e < m; ++e) {
      if (added & (CoverMask{1} << e)) {
        const auto [u, v] = non_edges[e];
        nbrs[u] |= Mask{1} << v;
        nbrs[v] |= Mask{1} << u;
      }
    }
    if (search.run(nbrs)) sets.push_back(full & ~added);
  }
  if (!sets.empty() && sets.front() == full) return 1;

  // Drop sets contained in another candidate.
  std::sort(sets.begin(), sets.end(), [](CoverMask a, CoverMask b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<CoverMask> maximal;
  for (const CoverMask s : sets) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                       [s](CoverMask t) { return (s & t) == s; });
    if (!dominated) maximal.push_back(s);
  }

  std::map<std::pair<CoverMask, int>, bool> memo;
  for (int k = 2; k <= static_cast<int>(m); ++k) {
    if (coverable(full, k, maximal, memo)) return k;
  }
  return static_cast<int>(m);
}

}  // namespace cag
