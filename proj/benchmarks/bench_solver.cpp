#include <benchmark/benchmark.h>

#include "hfm/oracle.hpp"
#include "hfm/solver.hpp"

namespace {

void BM_SolveCase(benchmark::State& state) {
  const auto& c = hfm::oracle::builtin_cases()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(c.name);
  for (auto _ : state) benchmark::DoNotOptimize(hfm::solve(c.problem, c.m));
}
BENCHMARK(BM_SolveCase)->DenseRange(0, 13)->Unit(benchmark::kMillisecond);

void BM_SolveScaling(benchmark::State& state) {
  const auto& c = hfm::oracle::builtin_cases()[8];  // cubic nonlinearity, alpha = 2.55
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hfm::solve(c.problem, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveScaling)
    ->RangeMultiplier(2)
    ->Range(64, 2048)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

}  // namespace
