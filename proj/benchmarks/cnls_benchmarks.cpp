#include <benchmark/benchmark.h>

#include "cnls/bourgain.hpp"
#include "cnls/ensemble.hpp"
#include "cnls/experiments.hpp"
#include "cnls/integrator.hpp"
#include "cnls/trilinear.hpp"

using namespace cnls;

static void BM_CubicProduct(benchmark::State& state) {
  const GridSpec grid(static_cast<int>(state.range(0)));
  const auto u = random_band_field(grid, grid.size() / 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(g_full(u));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CubicProduct)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

static void BM_TripleSumOracle(benchmark::State& state) {
  const GridSpec grid(static_cast<int>(state.range(0)));
  const auto u = random_band_field(grid, grid.size() / 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(g_oracle(u, u, u, nonresonant_triple));
}
BENCHMARK(BM_TripleSumOracle)->Arg(16)->Arg(32)->Arg(64);

static void BM_Step(benchmark::State& state) {
  SolverConfig config;
  config.grid = GridSpec(static_cast<int>(state.range(0)));
  config.equation = state.range(1) == 0 ? Equation::CubicNLS : Equation::LimitPDE;
  config.alpha_sq = 10.0;
  const auto u = random_sparse_field(config.grid, 5, 4, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(step(u, config));
}
BENCHMARK(BM_Step)->ArgsProduct({{128, 512}, {0, 1}});

static void BM_LambdaRatio(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = random_spacetime_field(n, GridSpec(n), kTwoPi, {}, 1);
  const auto v = random_spacetime_field(n, GridSpec(n), kTwoPi, {}, 2);
  const auto w = random_spacetime_field(n, GridSpec(n), kTwoPi, {}, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_ratio(u, v, w, TrilinearPiece::Lambda1, presets::kNonresonant.in,
                                          presets::kNonresonant.out));
  }
}
BENCHMARK(BM_LambdaRatio)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ModeSweep(benchmark::State& state) {
  WeakLimitConfig config;
  config.n_sweep = {8, 16};
  config.t_eval = {0.1};
  config.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_mode_sweep(config));
}
BENCHMARK(BM_ModeSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
