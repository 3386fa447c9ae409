#include <gtest/gtest.h>

#include <random>

#include "cag/analysis.hpp"
#include "cag/constructions.hpp"
#include "cag/error.hpp"
#include "cag/generators.hpp"
#include "cag/geometry.hpp"
#include "cag/oracle.hpp"
#include "support/test_oracles.hpp"

namespace cag {
namespace {

using testing::arc;
using testing::family;

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

void expect_represents(const BoxRep& rep, const ArcFamily& f) {
  const Graph g = testing::reference_graph(f);
  EXPECT_TRUE(verify(rep, g).ok);
  for (std::size_t d = 0; d < rep.dims(); ++d) {
    const Graph dim = graph_of_dimension(rep, d);
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(dim.adjacent(u, v)) << "dimension " << d;
  }
}

ArcFamily ring(int k, const Rational& len) {
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.emplace_back(TurnPos(i, k), TurnPos(ratio(i, k) + len));
  return family(std::move(arcs));
}

// Sparse families for the degree builder: keep drawing until delta fits.
std::vector<ArcFamily> sparse_families(int n, int alpha, const Rational& max_len, int count) {
  std::vector<ArcFamily> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count && seed < 100000; ++seed) {
    auto f = gen_random(n, max_len, seed, alpha);
    if (static_cast<long>(max_degree(intersection_graph(f))) < degree_bound(n, alpha)) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

TEST(Method, Names) {
  for (Method m : {Method::Interval, Method::Degree, Method::Overlap, Method::Cover, Method::Auto}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_EQ(kind_of([] { parse_method("boxes"); }), ErrorKind::InvalidArgument);
}

TEST(IntervalCase, Examples) {
  const auto two = family({arc(0, 1, 1, 8), arc(1, 2, 5, 8)});
  const auto rep = build_interval_case(two);
  EXPECT_EQ(rep.dims(), 1U);
  EXPECT_EQ(represented_graph(rep).edge_count(), 0U);

  // Each arc overlaps only its successor; the last stops short of the first.
  const auto path = family({arc(0, 1, 1, 4), arc(1, 5, 9, 20), arc(2, 5, 13, 20), arc(3, 5, 7, 8)});
  const auto prep = build_interval_case(path);
  EXPECT_EQ(prep.dims(), 1U);
  EXPECT_EQ(represented_graph(prep).edges(), testing::graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}).edges());

  EXPECT_EQ(kind_of([] { build_interval_case(gen_roberts(6)); }), ErrorKind::CircleCovered);
}

TEST(IntervalCase, RanksFromUncoveredPoint) {
  std::mt19937_64 rng(31);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = gen_random(std::uniform_int_distribution<int>(2, 20)(rng), Rational(1, 6), rng(), 2);
    const auto point = uncovered_point(f);
    if (!point) continue;
    ++built;
    const auto rep = build_interval_case(f);
    ASSERT_EQ(rep.dims(), 1U);
    const auto sigma = sigma_order(f, *point);
    for (std::size_t v = 0; v < f.size(); ++v) {
      EXPECT_EQ(rep.intervals[0][v].lo, Rational(static_cast<long>(sigma.left_rank[v])));
      EXPECT_EQ(rep.intervals[0][v].hi, Rational(static_cast<long>(sigma.right_rank[v])));
    }
    expect_represents(rep, f);
  }
  EXPECT_GT(built, 100);
}

TEST(Degree, DisjointShortArcs) {
  std::vector<Arc> arcs;
  for (int i = 0; i < 8; ++i) arcs.emplace_back(TurnPos(2 * i + 1, 17), TurnPos(4 * i + 3, 34));
  const auto f = family(std::move(arcs));
  const auto rep = build_degree(f, 2);
  EXPECT_EQ(rep.dims(), 2U);
  EXPECT_EQ(represented_graph(rep).edge_count(), 0U);
}

TEST(Degree, RandomSparseFamilies) {
  for (const auto& [n, alpha, len] :
       {std::tuple{40, 2, Rational(1, 16)}, std::tuple{60, 3, Rational(1, 12)},
        std::tuple{64, 4, Rational(1, 10)}}) {
    const auto families = sparse_families(n, alpha, len, 20);
    ASSERT_EQ(families.size(), 20U) << "n=" << n;
    for (const auto& f : families) {
      const auto rep = build_degree(f, alpha);
      EXPECT_EQ(rep.dims(), static_cast<std::size_t>(alpha));
      expect_represents(rep, f);
    }
  }
}

TEST(Degree, DimensionsAreProjections) {
  const auto families = sparse_families(30, 3, Rational(1, 10), 5);
  ASSERT_FALSE(families.empty());
  const AxisSystem sys(3);
  for (const auto& f : families) {
    ASSERT_TRUE(is_normalized(f, 3));
    const auto rep = build_degree(f, 3);
    for (int j = 0; j < 3; ++j) {
      for (std::size_t v = 0; v < f.size(); ++v) {
        const auto proj = proj_interval(f[v], j, sys);
        EXPECT_EQ(rep.intervals[j][v].lo, proj.lo.coordinate());
        EXPECT_EQ(rep.intervals[j][v].hi, proj.hi.coordinate());
      }
    }
  }
}

TEST(Degree, RenormalizesCoarseInput) {
  // Endpoints on the 1/24 grid sit on half-axes and coincide.
  std::vector<Arc> arcs;
  for (int i = 0; i < 12; ++i) arcs.emplace_back(TurnPos(2 * i, 24), TurnPos(2 * i + 1, 24));
  arcs.emplace_back(TurnPos(1, 24), TurnPos(2, 24));
  const auto f = family(std::move(arcs));
  ASSERT_FALSE(is_normalized(f, 2));
  const auto rep = build_degree(f, 2);
  expect_represents(rep, f);
}

TEST(Degree, Errors) {
  EXPECT_EQ(kind_of([] { build_degree(gen_roberts(6), 2); }), ErrorKind::DegreeTooHigh);
  EXPECT_EQ(kind_of([] { build_degree(gen_roberts(6), 3); }), ErrorKind::DegreeTooHigh);
  EXPECT_EQ(kind_of([] { build_degree(gen_roberts(6), 1); }), ErrorKind::InvalidArgument);
}

TEST(Overlap, Roberts) {
  const auto r6 = normalize(gen_roberts(6), 2);
  const auto rep = build_overlap(r6);
  EXPECT_EQ(rep.dims(), 3U);
  EXPECT_EQ(represented_graph(rep).edges(), testing::complement_of_matching(6).edges());
  expect_represents(rep, r6);

  const auto r4 = normalize(gen_roberts(4), 2);
  const auto rep4 = build_overlap(r4);
  EXPECT_EQ(rep4.dims(), 2U);
  EXPECT_EQ(boxicity_exact(represented_graph(rep4)), 2);
}

TEST(Overlap, ZeroOverlapGivesOneDimension) {
  const auto two = family({arc(0, 1, 1, 8), arc(1, 2, 5, 8)});
  const auto rep = build_overlap(two);
  EXPECT_EQ(rep.dims(), 1U);
  EXPECT_EQ(represented_graph(rep), represented_graph(build_interval_case(two)));
}

TEST(Overlap, DimsFollowMinimumOverlap) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    const auto f = gen_random(n, ratio(std::uniform_int_distribution<long>(1, 12)(rng), 16), rng(), 2);
    const auto rep = build_overlap(f);
    EXPECT_EQ(rep.dims(), sweep_overlap(f).r_inf + 1);
    expect_represents(rep, f);
  }
}

TEST(Overlap, RejectsCoincidentEndpoints) {
  EXPECT_EQ(kind_of([] { build_overlap(family({arc(0, 1, 1, 4), arc(1, 4, 1, 2)})); }),
            ErrorKind::CoincidentEndpoints);
}

TEST(Cover, Rings) {
  for (const auto& f : {ring(6, Rational(5, 24)), ring(10, Rational(3, 20))}) {
    const auto rep = build_cover(f);
    EXPECT_EQ(rep.dims(), 3U);
    expect_represents(rep, f);
  }
  EXPECT_EQ(kind_of([] { build_cover(gen_roberts(6)); }), ErrorKind::CoverTooSmall);
  EXPECT_EQ(kind_of([] { build_cover(ring(4, Rational(5, 16))); }), ErrorKind::CoverTooSmall);
}

TEST(Cover, GeneratedRings) {
  for (int m = 5; m <= 12; ++m) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto f = gen_ring(m, static_cast<int>(seed % 6), seed);
      ASSERT_GT(*min_circular_cover(f).L, 4U);
      const auto rep = build_cover(f);
      EXPECT_EQ(rep.dims(), 3U);
      expect_represents(rep, f);
    }
  }
}

TEST(Cover, UncoveredFamiliesStillBuild) {
  const auto two = family({arc(0, 1, 1, 8), arc(1, 2, 5, 8)});
  const auto rep = build_cover(two);
  EXPECT_EQ(rep.dims(), 3U);
  expect_represents(rep, two);
}

TEST(Auto, Examples) {
  const auto two = family({arc(0, 1, 1, 8), arc(1, 2, 5, 8)});
  const auto uncovered = build_auto_detailed(two);
  EXPECT_EQ(uncovered.chosen, Method::Interval);
  EXPECT_EQ(uncovered.rep.dims(), 1U);

  const auto r6 = build_auto_detailed(gen_roberts(6));
  EXPECT_EQ(r6.chosen, Method::Overlap);
  EXPECT_EQ(r6.rep.dims(), 3U);
  for (const auto& c : r6.candidates) {
    if (c.method == Method::Cover || c.method == Method::Degree) EXPECT_FALSE(c.applicable);
  }
}

TEST(Auto, NeverWorseThanAnyApplicableBuilder) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const ArcFamily f = trial % 3 == 0 ? gen_ring(std::uniform_int_distribution<int>(5, 9)(rng), 3, rng())
                                       : gen_random(24, ratio(std::uniform_int_distribution<long>(1, 8)(rng), 16), rng(), 2);
    const auto result = build_auto_detailed(f);
    expect_represents(result.rep, f);
    for (const auto& c : result.candidates) {
      if (c.applicable && c.dims) EXPECT_LE(result.rep.dims(), *c.dims);
    }
    EXPECT_EQ(build_auto(f), result.rep);
  }
}

TEST(Auto, TieGoesToCoverBeforeOverlap) {
  // Twelve arcs of length 5/24 at spacing 1/12: every point is in two or
  // three arcs and six are needed to cover, so cover and overlap both give 3.
  const auto f = ring(12, Rational(5, 24));
  ASSERT_EQ(sweep_overlap(f).r_inf, 2U);
  ASSERT_EQ(*min_circular_cover(f).L, 6U);
  const auto result = build_auto_detailed(f);
  EXPECT_EQ(result.chosen, Method::Cover);
  EXPECT_EQ(result.rep.dims(), 3U);
}

TEST(Verify, DetectsTamperedRepresentation) {
  const auto r6 = normalize(gen_roberts(6), 2);
  auto rep = build_overlap(r6);
  const Graph g = intersection_graph(r6);
  ASSERT_TRUE(verify(rep, g).ok);
  // Push vertex 0 far right in every dimension: it loses all its edges.
  for (auto& dim : rep.intervals) dim[0] = Interval{Rational(100), Rational(101)};
  const auto report = verify(rep, g);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.missing_edges.size(), g.degree(0));
  EXPECT_TRUE(report.extra_edges.empty());
}

}  // namespace
}  // namespace cag
