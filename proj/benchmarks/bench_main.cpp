#include <random>

#include <benchmark/benchmark.h>

#include "anticoh/majorana.hpp"
#include "anticoh/measures.hpp"
#include "anticoh/reductions.hpp"
#include "anticoh/search.hpp"
#include "anticoh/thomson.hpp"

using namespace anticoh;

namespace {

SpinState random_state(int two_j, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexVector c(two_j + 1);
  for (auto& z : c) z = Complex(normal(rng), normal(rng));
  return {SpinQuantumNumber(two_j), c / c.norm()};
}

void BM_ReducedDensity(benchmark::State& st) {
  const SpinState s = random_state(static_cast<int>(st.range(0)), 1);
  const int t = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(reduced_density(s, t));
}
BENCHMARK(BM_ReducedDensity)->Args({10, 2})->Args({20, 5})->Args({100, 25})->Args({200, 50});

void BM_MeasureProfile(benchmark::State& st) {
  const SpinState s = random_state(static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(measure_profile(s));
}
BENCHMARK(BM_MeasureProfile)->Arg(10)->Arg(40);

void BM_StateToPoints(benchmark::State& st) {
  const SpinState s = random_state(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(state_to_points(s));
}
BENCHMARK(BM_StateToPoints)->Arg(6)->Arg(20)->Arg(100);

void BM_SearchAnticoherent(benchmark::State& st) {
  SearchProblem problem{SpinQuantumNumber(static_cast<int>(st.range(0))), static_cast<int>(st.range(1)), 0, {}};
  problem.options.restarts = 4;
  for (auto _ : st) benchmark::DoNotOptimize(search_anticoherent(problem));
}
BENCHMARK(BM_SearchAnticoherent)->Args({6, 3})->Args({12, 3})->Unit(benchmark::kMillisecond);

void BM_Thomson(benchmark::State& st) {
  ThomsonOptions opts;
  opts.restarts = 4;
  for (auto _ : st) benchmark::DoNotOptimize(solve_thomson(static_cast<int>(st.range(0)), opts));
}
BENCHMARK(BM_Thomson)->Arg(12)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
