#include <benchmark/benchmark.h>

#include "gaugenorm/duality.hpp"
#include "gaugenorm/extreme2.hpp"
#include "gaugenorm/generators.hpp"
#include "gaugenorm/norms.hpp"

using namespace gaugenorm;

static void BM_SNumbers(benchmark::State& state) {
  Rng rng(1);
  const auto t = random_gaussian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(s_numbers(t));
}
BENCHMARK(BM_SNumbers)->Arg(4)->Arg(16)->Arg(64);

static void BM_NormMatWeight(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = NormSpec::weight(gen::weight(rng, n));
  const auto t = random_gaussian(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(norm_mat(spec, t));
}
BENCHMARK(BM_NormMatWeight)->Arg(8)->Arg(32);

static void BM_DualLp(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = gen::sup_of(rng, n, 4);
  const auto x = gen::vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(dual_vec(spec, std::span<const double>(x)));
}
BENCHMARK(BM_DualLp)->Arg(8)->Arg(32)->Arg(64);

static void BM_UnitBallVertices(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto gauge = ordered_gauge(gen::sup_of(rng, n, 3), n);
  for (auto _ : state) benchmark::DoNotOptimize(unit_ball_vertices(gauge));
}
BENCHMARK(BM_UnitBallVertices)->Arg(4)->Arg(8)->Arg(12);

static void BM_LpDensityIntegral(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(lp_density_integral(p, 0.37));
}
BENCHMARK(BM_LpDensityIntegral)->Arg(15)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
