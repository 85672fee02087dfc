#include <benchmark/benchmark.h>

#include "metaopt/annealing.hpp"
#include "metaopt/chaos.hpp"
#include "metaopt/firefly.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/stochastic.hpp"
#include "metaopt/swarm.hpp"

namespace {

using namespace metaopt;

void BM_Anneal(benchmark::State& state) {
    annealing::AnnealingParams params;
    params.max_iters = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto problem = problems::make_problem("rastrigin", 10);
        benchmark::DoNotOptimize(annealing::anneal(problem, params, seed++).run.best_f);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Anneal)->Arg(1000)->Arg(10000);

void BM_Pso(benchmark::State& state) {
    swarm::PsoParams params;
    params.max_iters = 200;
    params.swarm_size = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto problem = problems::make_problem("ackley", 10);
        benchmark::DoNotOptimize(swarm::pso_optimize(problem, params, seed++).run.best_f);
    }
}
BENCHMARK(BM_Pso)->Arg(20)->Arg(80);

// The full loop is quadratic in the population.
void BM_Firefly(benchmark::State& state) {
    firefly::FireflyParams params;
    params.max_iters = 100;
    params.population = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto problem = problems::make_problem("sphere", 10);
        benchmark::DoNotOptimize(firefly::firefly_optimize(problem, params, seed++).run.best_f);
    }
}
BENCHMARK(BM_Firefly)->Arg(25)->Arg(50)->Arg(100);

void BM_LevySample(benchmark::State& state) {
    const auto dist =
        stochastic::StepDistribution::levy_stable(1.0, static_cast<double>(state.range(0)) / 10.0);
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(stochastic::sample_step(dist, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LevySample)->Arg(10)->Arg(15)->Arg(20);

void BM_BifurcationScan(benchmark::State& state) {
    const auto grid = chaos::make_grid(0.0, 4.5, 0.01);
    chaos::ScanOptions opts;
    for (auto _ : state) {
        const auto scan = chaos::bifurcation_scan(
            [](double b) { return firefly::ScalarMap::firefly_reduced(b); }, "beta0", grid, 0.8,
            opts);
        benchmark::DoNotOptimize(scan.lyapunov.data());
    }
}
BENCHMARK(BM_BifurcationScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
