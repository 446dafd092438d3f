#include <benchmark/benchmark.h>

#include "bosonic/gaussian.hpp"
#include "bosonic/metaplectic.hpp"
#include "bosonic/random.hpp"
#include "bosonic/symalg.hpp"

using namespace bosonic;

static void BM_GaussianTable(benchmark::State& state) {
  Rng rng(3);
  const auto d = static_cast<int>(state.range(0));
  const auto n = static_cast<int>(state.range(1));
  const SymAntilinear z = random_symmetric(rng, d, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_table(z, n));
}
BENCHMARK(BM_GaussianTable)->Args({1, 16})->Args({2, 16})->Args({3, 16})->Args({3, 24});

static void BM_MetaplecticKernel(benchmark::State& state) {
  Rng rng(5);
  const auto d = static_cast<int>(state.range(0));
  const auto n = static_cast<int>(state.range(1));
  const SymplecticPack p = pack(random_symplectic(rng, d));
  for (auto _ : state) benchmark::DoNotOptimize(metaplectic_kernel(p, 2 * n));
}
BENCHMARK(BM_MetaplecticKernel)->Args({1, 8})->Args({2, 8})->Args({3, 8})->Args({2, 12});

static void BM_IntertwineResidual(benchmark::State& state) {
  Rng rng(7);
  const auto d = static_cast<int>(state.range(0));
  const auto n = static_cast<int>(state.range(1));
  const SymplecticPack p = pack(random_symplectic(rng, d));
  const Kernel u = metaplectic_kernel(p, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(intertwine_residual(p, u));
}
BENCHMARK(BM_IntertwineResidual)->Args({1, 8})->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_FunctionalProduct(benchmark::State& state) {
  Rng rng(11);
  const auto vars = static_cast<int>(state.range(0));
  const auto n = static_cast<int>(state.range(1));
  const DualTable a = random_table(rng, vars, n), b = random_table(rng, vars, n);
  for (auto _ : state) benchmark::DoNotOptimize(functional_product(a, b));
}
BENCHMARK(BM_FunctionalProduct)->Args({2, 12})->Args({4, 8})->Args({6, 8});
BENCHMARK_MAIN();
