#include <fekete/bazilevic.hpp>
#include <fekete/caratheodory.hpp>
#include <fekete/powerseries.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace fekete;

TruncatedSeries sample_series(std::size_t order) {
  TruncatedSeries s(order);
  s[1] = 1;
  for (std::size_t k = 2; k <= order; ++k) s[k] = Complex(0.3 / k, -0.1 / k);
  return s;
}

void BM_Multiply(benchmark::State& state) {
  const auto a = sample_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_Multiply)->Arg(10)->Arg(40);

void BM_Compose(benchmark::State& state) {
  const auto a = sample_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, a));
}
BENCHMARK(BM_Compose)->Arg(10)->Arg(40);

void BM_Revert(benchmark::State& state) {
  const auto a = sample_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(revert(a));
}
BENCHMARK(BM_Revert)->Arg(10)->Arg(40);

void BM_BruteForceSup(benchmark::State& state) {
  const GridSpec grid = GridSpec::uniform(static_cast<std::size_t>(state.range(0)));
  const Complex v(0.5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_sup([v](const CaratheodoryPoint& p) { return std::abs(p.c2 - v * p.c1 * p.c1); }, grid));
  }
}
BENCHMARK(BM_BruteForceSup)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SolveFromSchwarz(benchmark::State& state) {
  const auto w = TruncatedSeries(8, {0, 0.4, Complex(0.1, 0.2), -0.05});
  const ClassParams p{0.5, 0.7, 2};
  for (auto _ : state) benchmark::DoNotOptimize(solve_from_schwarz(w, p, 8));
}
BENCHMARK(BM_SolveFromSchwarz);

}  // namespace

BENCHMARK_MAIN();
