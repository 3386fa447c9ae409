#include "cag/analysis.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "cag/error.hpp"

namespace cag {

std::vector<std::size_t> overlap_set(const ArcFamily& f, const TurnPos& p) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (arc_contains(f[v], p)) out.push_back(v);
  }
  return out;
}

std::vector<GapCount> gap_samples(const ArcFamily& f) {
  // Net change in coverage when stepping clockwise over each position.
  std::vector<std::pair<TurnPos, long>> events;
  events.reserve(2 * f.size());
  for (const auto& a : f.arcs()) {
    events.emplace_back(a.l(), +1);
    events.emplace_back(a.r(), -1);
  }
  std::sort(events.begin(), events.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::pair<TurnPos, long>> positions;
  for (const auto& [pos, delta] : events) {
    if (!positions.empty() && positions.back().first == pos) {
      positions.back().second += delta;
    } else {
      positions.emplace_back(pos, delta);
    }
  }

  const std::size_t m = positions.size();
  std::vector<GapCount> gaps;
  gaps.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const TurnPos& from = positions[i].first;
    const TurnPos& to = positions[(i + 1) % m].first;
    TurnPos sample(from.value() + clockwise_offset(from, to) / 2);
    gaps.push_back({from, to, std::move(sample), 0});
  }
  gaps[0].count = overlap_set(f, gaps[0].sample).size();
  for (std::size_t i = 1; i < m; ++i) {
    gaps[i].count = static_cast<std::size_t>(static_cast<long>(gaps[i - 1].count) +
                                             positions[i].second);
  }
  return gaps;
}

SweepResult sweep_overlap(const ArcFamily& f) {
  if (!endpoints_distinct(f)) {
    throw Error(ErrorKind::CoincidentEndpoints, "sweep needs pairwise distinct endpoints");
  }
  auto gaps = gap_samples(f);
  const auto best = std::min_element(gaps.begin(), gaps.end(), [](const auto& a, const auto& b) {
    return a.count < b.count;
  });
  SweepResult out{best->count, best->sample, {}};
  out.gap_counts = std::move(gaps);
  return out;
}

SigmaOrder sigma_order(const ArcFamily& f, const TurnPos& start) {
  struct Entry {
    Rational offset;
    bool is_right;
    std::size_t vertex;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].l() == start || f[v].r() == start) {
      throw Error(ErrorKind::StartOnEndpoint,
                  "start point " + to_fraction_string(start.value()) + " is an arc endpoint");
    }
    entries.push_back({clockwise_offset(start, f[v].l()), false, v});
    entries.push_back({clockwise_offset(start, f[v].r()), true, v});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.offset, a.is_right, a.vertex) < std::tie(b.offset, b.is_right, b.vertex);
  });
  SigmaOrder out{std::vector<std::size_t>(f.size()), std::vector<std::size_t>(f.size())};
  for (std::size_t rank = 0; rank < entries.size(); ++rank) {
    auto& slot = entries[rank].is_right ? out.right_rank : out.left_rank;
    slot[entries[rank].vertex] = rank + 1;
  }
  return out;
}

std::optional<TurnPos> uncovered_point(const ArcFamily& f) {
  for (const auto& gap : gap_samples(f)) {
    if (gap.count == 0) return gap.sample;
  }
  return std::nullopt;
}

namespace {

// Greedy farthest-reach cover unrolled from l(start); empty when the greedy
// walk stalls.
std::vector<std::size_t> greedy_cover_from(const ArcFamily& f, std::size_t start) {
  const std::size_t n = f.size();
  std::vector<Rational> offset(n), reach_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    offset[v] = clockwise_offset(f[start].l(), f[v].l());
    reach_of[v] = offset[v] + arc_length_turns(f[v]);
  }
  std::vector<std::size_t> chosen{start};
  Rational reach = reach_of[start];
  while (reach < 1) {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (offset[v] <= reach && reach_of[v] > reach && (!best || reach_of[v] > reach_of[*best])) {
        best = v;
      }
    }
    if (!best || chosen.size() == n) return {};
    chosen.push_back(*best);
    reach = reach_of[*best];
  }
  return chosen;
}

}  // namespace

CoverResult min_circular_cover(const ArcFamily& f) {
  if (uncovered_point(f)) return {};
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < f.size(); ++s) {
    auto cover = greedy_cover_from(f, s);
    if (!cover.empty() && (best.empty() || cover.size() < best.size())) best = std::move(cover);
  }
  if (best.empty()) {
    // Unreachable: a covered circle always admits a greedy cover.
    throw Error(ErrorKind::VerificationFailed, "no cover found for a covered circle");
  }
  const std::size_t size = best.size();
  return {std::move(best), size};
}

long degree_bound(long n, long alpha) { return (n * (alpha - 1)) / (2 * alpha); }

std::optional<int> min_alpha_for_degree(long n, long delta) {
  for (long alpha = 2; alpha <= n; ++alpha) {
    if (delta < degree_bound(n, alpha)) return static_cast<int>(alpha);
  }
  return std::nullopt;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace cag
