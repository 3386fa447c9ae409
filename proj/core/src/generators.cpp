#include "cag/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "cag/error.hpp"

namespace cag {

namespace {

std::string label(char prefix, long i) { return std::string(1, prefix) + std::to_string(i); }

// Uniform integer in [lo, hi] from a seeded engine.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

ArcFamily gen_roberts(int n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::OddN, "n must be even and at least 4, got " + std::to_string(n));
  }
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    names.push_back(label('a', i));
    arcs.emplace_back(TurnPos(i, n), TurnPos((i + n / 2 - 1) % n, n));
  }
  return ArcFamily(std::move(names), std::move(arcs));
}

ArcFamily gen_tightness(int alpha, int n) {
  if (alpha < 2) throw Error(ErrorKind::InvalidArgument, "alpha must be at least 2");
  const int t = 2 * alpha + 2;
  if (n % t != 0 || n < 2 * t) {
    throw Error(ErrorKind::BadDivisibility,
                "n must be a multiple of 2*alpha+2 = " + std::to_string(t) + " and at least " +
                    std::to_string(2 * t) + ", got " + std::to_string(n));
  }
  const int per_gap = n / t - 2;
  const Rational spacing(1, n - t);
  const Rational small(1, 4 * n);

  std::vector<std::string> names;
  std::vector<Arc> arcs;
  for (int i = 0; i < t; ++i) {
    names.push_back(label('u', i));
    arcs.emplace_back(TurnPos(i, t), TurnPos((i + alpha) % t, t));
  }
  for (int i = 0; i < t; ++i) {
    names.push_back(label('v', i));
    arcs.emplace_back(TurnPos(i, t), TurnPos((i + 1) % t, t));
  }
  for (int i = 0; i < t; ++i) {
    for (int k = 0; k < per_gap; ++k) {
      const Rational start = ratio(i, t) + (k + 1) * spacing;
      names.push_back("h" + std::to_string(i) + "_" + std::to_string(k));
      arcs.emplace_back(TurnPos(start), TurnPos(start + small));
    }
  }
  return ArcFamily(std::move(names), std::move(arcs));
}

ArcFamily gen_random(int n, const Rational& max_len, std::uint64_t seed, int alpha) {
  if (n < 2) throw Error(ErrorKind::DegenerateFamily, "a family needs at least two arcs");
  if (max_len <= 0 || max_len >= 1) {
    throw Error(ErrorKind::InvalidArgument, "max_len must lie strictly between 0 and 1");
  }
  constexpr long kLengthSteps = 1024;
  const long grid = 64L * n;
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) {
    const Rational l(draw(rng, 0, grid - 1), grid);
    const Rational len = max_len * ratio(draw(rng, 1, kLengthSteps), kLengthSteps);
    names.push_back(label('v', v));
    arcs.emplace_back(TurnPos(l), TurnPos(l + len));
  }
  return normalize(ArcFamily(std::move(names), std::move(arcs)), alpha);
}

ArcFamily gen_ring(int m, int extra, std::uint64_t seed) {
  if (m < 5) throw Error(ErrorKind::InvalidArgument, "a ring needs at least 5 arcs");
  if (extra < 0) throw Error(ErrorKind::InvalidArgument, "extra must be non-negative");
  const long fine = 64L * m;  // grid step 1/(64m); one ring slot is 64 steps
  std::mt19937_64 rng(seed);

  // Anchor k sits in the first quarter of slot k; ring arc k runs from
  // anchor k to a little past anchor k+1, so it meets only its two ring
  // neighbours and every ring arc is needed to cover the circle.
  std::vector<long> anchor(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) anchor[static_cast<std::size_t>(k)] = 64L * k + draw(rng, 0, 15);

  std::vector<std::string> names;
  std::vector<Arc> arcs;
  for (int k = 0; k < m; ++k) {
    const long start = anchor[static_cast<std::size_t>(k)];
    const long end = anchor[static_cast<std::size_t>((k + 1) % m)] + (k + 1 == m ? fine : 0) +
                     draw(rng, 1, 15);
    names.push_back(label('r', k));
    arcs.emplace_back(TurnPos(ratio(start, fine)), TurnPos(ratio(end, fine)));
  }
  // Extras sit in [slot k + 16, slot k + 63], which ring arc k always covers.
  for (int i = 0; i < extra; ++i) {
    const long slot = 64L * draw(rng, 0, m - 1);
    const long start = slot + draw(rng, 16, 56);
    const long len = draw(rng, 1, 7);
    names.push_back(label('x', i));
    arcs.emplace_back(TurnPos(ratio(start, fine)), TurnPos(ratio(start + len, fine)));
  }
  return normalize(ArcFamily(std::move(names), std::move(arcs)), 2);
}

}  // namespace cag
