#include <benchmark/benchmark.h>

#include <random>

#include "sperner/chains.hpp"
#include "sperner/kernels.hpp"

using namespace sperner;

namespace {

Matrix random_matrix(std::size_t n) {
  const Field k = Field::prime(32003);
  std::mt19937_64 rng(n);
  Matrix m(k, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = k.random(rng);
  }
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rref_serial(m));
}

void BM_RrefParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rref_parallel(m));
}

// Layer 3 of the (3,3,3,2) box: |P_3| = |P_4| = 13.
const kernels::NeighborMasks& hall_input() {
  static const auto adj = layer_adjacency(DegreeVector({3, 3, 3, 2}), 3);
  return adj;
}

void BM_HallSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hall_scan_serial(hall_input()));
}

void BM_HallParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hall_scan_parallel(hall_input()));
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(32)->Arg(96);
BENCHMARK(BM_RrefParallel)->Arg(32)->Arg(96);
BENCHMARK(BM_HallSerial);
BENCHMARK(BM_HallParallel);

BENCHMARK_MAIN();
