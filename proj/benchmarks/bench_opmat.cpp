#include <benchmark/benchmark.h>

#include <cmath>

#include "hfm/opmat.hpp"

namespace {

void BM_Build(benchmark::State& state) {
  const hfm::Grid grid(1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hfm::build(0.7, grid));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Build)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_BuildIntegerOrder(benchmark::State& state) {
  const hfm::Grid grid(1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hfm::build(2.0, grid));
}
BENCHMARK(BM_BuildIntegerOrder)->Arg(500);

void BM_FracIntegrate(benchmark::State& state) {
  const hfm::Grid grid(1.0, static_cast<std::size_t>(state.range(0)));
  const hfm::OpMatSet ops = hfm::build(0.7, grid);
  const hfm::HfPair p = hfm::sample([](double t) { return std::sin(t); }, grid);
  for (auto _ : state) benchmark::DoNotOptimize(hfm::frac_integrate(p, ops));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FracIntegrate)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

void BM_CacheHit(benchmark::State& state) {
  hfm::OpMatCache cache;
  const hfm::Grid grid(1.0, 500);
  cache.get(0.7, grid);
  for (auto _ : state) benchmark::DoNotOptimize(cache.get(0.7, grid));
}
BENCHMARK(BM_CacheHit);

}  // namespace
