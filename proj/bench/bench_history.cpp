#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fracdiff/harness.hpp"
#include "fracdiff/integral_scheme.hpp"
#include "fracdiff/kernels.hpp"

using namespace fracdiff;

namespace {

struct KernelData {
  std::vector<double> weights;
  std::vector<double> history;
  std::vector<double> out;
  std::size_t width;

  KernelData(std::size_t levels, std::size_t w) : weights(levels), history(levels * w), out(w), width(w) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& x : weights) x = u(rng);
    for (double& x : history) x = u(rng);
  }
};

template <bool Parallel>
void BM_History(benchmark::State& state) {
  KernelData d(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)) + 1);
  const kernels::HistoryView view{d.history, d.width};
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::accumulate_history(d.weights, view, d.out);
    } else {
      kernels::accumulate_history_serial(d.weights, view, d.out);
    }
    benchmark::DoNotOptimize(d.out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(1) + 1));
}

void BM_IntegralSolveOptions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  auto [spec, exact] = example_problem(0.6);
  const SpatialMesh spatial = build_spatial_mesh(spec.l, n);
  const DecomposedProblem decomposed(spec, spatial);
  const TemporalMesh mesh = build_three_piece_mesh(0.6, 1.0, n);
  for (auto _ : state) {
    auto grid = solve(decomposed, mesh, SolveOptions{parallel});
    benchmark::DoNotOptimize(grid.U.data());
  }
  state.SetLabel(parallel ? "openmp" : "serial");
}

}  // namespace

BENCHMARK(BM_History<false>)->Args({256, 256})->Args({1024, 1024})->Args({1024, 4096});
BENCHMARK(BM_History<true>)->Args({256, 256})->Args({1024, 1024})->Args({1024, 4096});
BENCHMARK(BM_IntegralSolveOptions)->Args({256, 0})->Args({256, 1})->Args({512, 0})->Args({512, 1})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
