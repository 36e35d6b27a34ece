#include <benchmark/benchmark.h>

#include "comblab/genfun.hpp"
#include "comblab/oracle.hpp"
#include "comblab/series.hpp"
#include "comblab/simulate.hpp"

using namespace comblab;

static void BM_SeriesMul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const PowerSeries a = genfun::green_G(order), b = genfun::excursion_E(order);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128);

static void BM_SeriesDiv(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const PowerSeries a = genfun::green_G(order), b = genfun::a_det(6, order);
  for (auto _ : state) benchmark::DoNotOptimize(div(a, b));
}
BENCHMARK(BM_SeriesDiv)->Arg(32)->Arg(64);

static void BM_SeriesCompose(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const PowerSeries f = genfun::psi_deviation_closed_form(4, order), g = genfun::w_of_z(order);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_SeriesCompose)->Arg(16)->Arg(32);

static void BM_DeviationH(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genfun::deviation_H(3, 40));
}
BENCHMARK(BM_DeviationH);

static void BM_OracleSteps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::position_distribution(n));
}
BENCHMARK(BM_OracleSteps)->Arg(20)->Arg(40);

static void BM_WalkSteps(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::uint64_t stream = 0;
  for (auto _ : state) {
    Rng rng = Rng::for_stream(1, stream++);
    benchmark::DoNotOptimize(simulate::run_walk(n, rng));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_WalkSteps)->Arg(10'000)->Arg(1'000'000);

static void BM_ExitTimeExact(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exit_time_expectation(r, Norm::inf));
}
BENCHMARK(BM_ExitTimeExact)->Arg(10)->Arg(25);

BENCHMARK_MAIN();
