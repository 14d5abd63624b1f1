#include <benchmark/benchmark.h>

#include <random>

#include "asc/distance.hpp"
#include "asc/families.hpp"
#include "asc/solver.hpp"

namespace {

asc::Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<asc::Edge> edges;
  for (asc::Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<asc::Vertex>(0, v - 1)(rng), v);
  for (asc::Vertex a = 0; a < n; ++a)
    for (asc::Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return asc::Graph(n, edges);
}

void BM_ecc_automatic(benchmark::State& state) {
  const auto g = random_connected(state.range(0), 4.0 / state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(asc::eccentricities(g));
}

void BM_ecc_bit_parallel(benchmark::State& state) {
  const auto g = random_connected(state.range(0), 4.0 / state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(asc::eccentricities(g, asc::EccKernel::bit_parallel));
}

void BM_ecc_bfs(benchmark::State& state) {
  const auto g = random_connected(state.range(0), 4.0 / state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(asc::eccentricities(g, asc::EccKernel::bfs));
}

void BM_ecc_reference(benchmark::State& state) {
  const auto g = random_connected(state.range(0), 4.0 / state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(asc::reference::eccentricities(g));
}

void BM_solver_pruned(benchmark::State& state) {
  const auto g = asc::path_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asc::exists_extension(g, 3, 2));
}

void BM_solver_naive(benchmark::State& state) {
  const auto g = asc::path_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asc::naive_reference(g, 3, 2));
}

}  // namespace

BENCHMARK(BM_ecc_automatic)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ecc_bit_parallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ecc_bfs)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ecc_reference)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solver_pruned)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solver_naive)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
