#pragma once

#include <cstdint>

#include "cag/model.hpp"
#include "cag/rational.hpp"

namespace cag {

/// n equally spaced points; arc i runs clockwise from p_i to
/// p_{(i + n/2 - 1) mod n}. The intersection graph is the complement of a
/// perfect matching. Throws Error(OddN) unless n is even and >= 4.
ArcFamily gen_roberts(int n);

/// Extremal family for the degree bound: with t = 2*alpha + 2 anchors,
/// u_i spans p_i -> p_{i+alpha}, v_i spans p_i -> p_{i+1}, and each gap
/// (p_i, p_{i+1}) holds n/t - 2 short pairwise-disjoint arcs h<i>_<k>.
/// Throws Error(BadDivisibility) unless t divides n and n >= 2t.
ArcFamily gen_tightness(int alpha, int n);

/// Seeded random family, normalised for `alpha`. Left endpoints are drawn
/// from a grid of 64n points and lengths uniformly from
/// {max_len * k / 1024 : k = 1..1024}.
ArcFamily gen_random(int n, const Rational& max_len, std::uint64_t seed, int alpha = 2);

/// Seeded ring of m >= 5 consecutive arcs that covers the circle with
/// L(F) = m, plus `extra` short arcs each lying inside a single ring arc.
/// Used as a source of families for the three-dimensional cover construction.
ArcFamily gen_ring(int m, int extra, std::uint64_t seed);

}  // namespace cag
