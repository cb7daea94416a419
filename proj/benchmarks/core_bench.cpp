#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "matroid_limits/forest.hpp"
#include "matroid_limits/graphgen.hpp"
#include "matroid_limits/local_stats.hpp"
#include "matroid_limits/planar.hpp"
#include "matroid_limits/quotient.hpp"

using namespace mlim;

namespace {

WeightList random_order(std::size_t m, std::uint64_t seed) {
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return WeightList::from_order(std::move(order));
}

void BM_InvasionRandomRegular(benchmark::State& state) {
  const MultiGraph g = random_regular(static_cast<std::size_t>(state.range(0)), 3, 1);
  const WeightList w = random_order(g.edge_count(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(invasion(g, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InvasionRandomRegular)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_WiredFreePatch(benchmark::State& state) {
  const PlanarMap m = hyperbolic_patch(3, 7, static_cast<std::uint32_t>(state.range(0)));
  const WeightList w = random_order(m.graph().edge_count(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(wired_free_forests(m, w));
}
BENCHMARK(BM_WiredFreePatch)->DenseRange(1, 3);

void BM_CanonicalCodeBall(benchmark::State& state) {
  const MultiGraph g = random_regular(200, 3, 4);
  const auto r = static_cast<std::uint32_t>(state.range(0));
  Vertex v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_code(ball(g, v, r)));
    v = (v + 1) % 200;
  }
}
BENCHMARK(BM_CanonicalCodeBall)->DenseRange(1, 3);

void BM_LocalDistribution(benchmark::State& state) {
  const MultiGraph g = torus_graph(20, 20);
  for (auto _ : state) benchmark::DoNotOptimize(local_distribution(g, 2));
}
BENCHMARK(BM_LocalDistribution);

void BM_EnumerateQk(benchmark::State& state) {
  const MultiGraph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_qk(g, SetFunction::rho, 2));
}
BENCHMARK(BM_EnumerateQk)->DenseRange(8, 16, 4);

void BM_FrontierQk(benchmark::State& state) {
  const MultiGraph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frontier_qk(g, SetFunction::rho, 2));
}
BENCHMARK(BM_FrontierQk)->RangeMultiplier(2)->Range(8, 64);

void BM_CheckDualityPatch(benchmark::State& state) {
  const PlanarMap m = hyperbolic_patch(4, 5, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_duality(m, 20, 5));
}
BENCHMARK(BM_CheckDualityPatch)->DenseRange(1, 2);

}  // namespace

BENCHMARK_MAIN();
