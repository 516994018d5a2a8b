#include <benchmark/benchmark.h>

#include <random>

#include "mubkit/builder.hpp"
#include "mubkit/checker.hpp"
#include "mubkit/geometry.hpp"
#include "mubkit/search.hpp"

using namespace mubkit;

static void BM_WoottersFields(benchmark::State& state) {
  const Field f = Field::create(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wootters_fields_mubs(f));
  state.SetLabel("d=" + std::to_string(f.order()));
}
BENCHMARK(BM_WoottersFields)->Args({3, 2})->Args({5, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_ClockShift(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(clock_shift_mubs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClockShift)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_CheckMubSet(benchmark::State& state) {
  const MubSet s = wootters_fields_mubs(Field::create(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(check_mub_set(s));
}
BENCHMARK(BM_CheckMubSet)->Args({3, 2})->Args({5, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  CMat a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = cplx(n(rng), n(rng));
  const CMat h = 0.5 * (a + a.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_spectral(h));
}
BENCHMARK(BM_Jacobi)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_Gradient(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<CMat> bases{CMat::identity(d)};
  for (std::uint64_t k = 1; k < 4; ++k) bases.push_back(random_unitary(d, k));
  for (auto _ : state) benchmark::DoNotOptimize(gradient(bases));
}
BENCHMARK(BM_Gradient)->Arg(3)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_SearchRestart(benchmark::State& state) {
  SearchConfig cfg;
  cfg.dim = static_cast<std::size_t>(state.range(0));
  cfg.target_bases = static_cast<std::size_t>(state.range(1));
  cfg.seed = 42;
  for (auto _ : state) benchmark::DoNotOptimize(search(cfg));
}
BENCHMARK(BM_SearchRestart)->Args({3, 4})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_Plane(benchmark::State& state) {
  const Field f = Field::create(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    const IncidenceStructure s = pg2(f);
    benchmark::DoNotOptimize(check_axioms(s));
  }
}
BENCHMARK(BM_Plane)->Args({3, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
