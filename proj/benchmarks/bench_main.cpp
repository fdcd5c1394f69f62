#include <benchmark/benchmark.h>

#include <random>

#include "stackopt/evo.hpp"
#include "stackopt/metrics.hpp"

using namespace stackopt;

namespace {

std::vector<Individual> random_population(std::size_t n, std::uint64_t seed) {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  Rng rng{seed};
  std::vector<Individual> pop;
  for (std::size_t i = 0; i < n; ++i) {
    auto g = random_genome(rng, config);
    auto e = evaluate(g, params, config);
    pop.push_back({g, e.objectives, e.constraints});
  }
  return pop;
}

void BM_Evaluate(benchmark::State& state) {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  Rng rng{1};
  auto g = random_genome(rng, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(g, params, config));
  }
}
BENCHMARK(BM_Evaluate);

void BM_NondominatedSort(benchmark::State& state) {
  auto pop = random_population(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    auto copy = pop;
    benchmark::DoNotOptimize(fast_nondominated_sort(copy));
  }
}
BENCHMARK(BM_NondominatedSort)->Arg(50)->Arg(100)->Arg(400);

void BM_Hypervolume(benchmark::State& state) {
  std::mt19937_64 rng{3};
  std::uniform_real_distribution<double> d{0.0, 1.2};
  std::vector<NormalizedPoint> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) {
    p = {d(rng), d(rng)};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypervolume_2d(pts));
  }
}
BENCHMARK(BM_Hypervolume)->Arg(50)->Arg(1000);

void BM_Run(benchmark::State& state) {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  config.seed = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(params, config));
  }
}
BENCHMARK(BM_Run)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
