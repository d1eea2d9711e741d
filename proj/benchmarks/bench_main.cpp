#include "multconv/oracle.hpp"
#include "multconv/universality.hpp"

#include <benchmark/benchmark.h>

using namespace multconv;

static void BM_Convolution(benchmark::State& state) {
  const int atoms = static_cast<int>(state.range(0));
  const Measure a = gen_measure(1, 3, atoms);
  const Measure b = gen_measure(2, 3, atoms);
  for (auto _ : state) benchmark::DoNotOptimize(mconv(a, b));
  state.SetComplexityN(atoms * atoms);
}
BENCHMARK(BM_Convolution)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_SphereConvolution(benchmark::State& state) {
  const int atoms = static_cast<int>(state.range(0));
  const SphereMeasure a = radial_project(gen_measure(3, 3, atoms));
  const SphereMeasure b = radial_project(gen_measure(4, 3, atoms));
  for (auto _ : state) benchmark::DoNotOptimize(sconv(a, b));
}
BENCHMARK(BM_SphereConvolution)->RangeMultiplier(2)->Range(4, 64);

static void BM_Symmetrize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Measure nu = gen_measure(5, n, 8);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(nu, unconditional_pair(n)));
}
BENCHMARK(BM_Symmetrize)->DenseRange(1, 4);

static void BM_DecideRn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Measure nu = gen_measure(6, n, 8);
  for (auto _ : state) benchmark::DoNotOptimize(decide_universal_rn(nu, power_set(n), no_symmetry_pair(n)));
}
BENCHMARK(BM_DecideRn)->DenseRange(1, 4);

static void BM_DecideSphere(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SphereMeasure nu = radial_project(gen_measure(7, n, 8));
  const Family support = *scope_support(Scope::Full, n, true);
  for (auto _ : state) benchmark::DoNotOptimize(decide_universal_sphere(nu, support, unconditional_pair(n)));
}
BENCHMARK(BM_DecideSphere)->DenseRange(1, 4);

BENCHMARK_MAIN();
