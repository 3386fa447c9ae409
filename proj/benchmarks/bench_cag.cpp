#include <benchmark/benchmark.h>

#include "cag/analysis.hpp"
#include "cag/constructions.hpp"
#include "cag/generators.hpp"
#include "cag/oracle.hpp"

namespace {

cag::ArcFamily sparse_family(int n, int alpha) {
  const long bound = cag::degree_bound(n, alpha);
  for (std::uint64_t seed = 0;; ++seed) {
    auto f = cag::gen_random(n, cag::Rational(1, 2 * n), seed, alpha);
    if (static_cast<long>(cag::max_degree(cag::intersection_graph(f))) < bound) return f;
  }
}

void BM_Normalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = cag::gen_roberts(n);
  for (auto _ : state) benchmark::DoNotOptimize(cag::normalize(f, 3));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Normalize)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SweepOverlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = cag::gen_random(n, cag::Rational(1, 4), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cag::sweep_overlap(f));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SweepOverlap)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_MinCircularCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = cag::gen_random(n, cag::Rational(1, 8), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cag::min_circular_cover(f));
}
BENCHMARK(BM_MinCircularCover)->RangeMultiplier(2)->Range(16, 256);

void BM_BuildDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = sparse_family(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cag::build_degree(f, 3));
}
BENCHMARK(BM_BuildDegree)->RangeMultiplier(2)->Range(32, 256);

void BM_BuildOverlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = cag::gen_random(n, cag::Rational(1, 6), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cag::build_overlap(f));
}
BENCHMARK(BM_BuildOverlap)->RangeMultiplier(2)->Range(16, 128);

void BM_BuildCover(benchmark::State& state) {
  const auto f = cag::gen_ring(static_cast<int>(state.range(0)), 10, 4);
  for (auto _ : state) benchmark::DoNotOptimize(cag::build_cover(f));
}
BENCHMARK(BM_BuildCover)->RangeMultiplier(2)->Range(8, 128);

void BM_BoxicityExact(benchmark::State& state) {
  const auto g = cag::intersection_graph(cag::gen_roberts(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cag::boxicity_exact(g));
}
BENCHMARK(BM_BoxicityExact)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
