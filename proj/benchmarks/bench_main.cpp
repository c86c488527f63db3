#include <benchmark/benchmark.h>

#include <numbers>

#include "pacman/green_continuous.hpp"
#include "pacman/green_discrete.hpp"
#include "pacman/potential_kernel.hpp"
#include "pacman/walk_mc.hpp"

namespace {

using namespace pacman;

void BM_GreenSolve(benchmark::State& state) {
    const auto d = build_lattice_domain(build_geometry(std::numbers::pi / 2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(green_solve(d, {0, 0}).stats.iterations);
    state.counters["sites"] = static_cast<double>(d.interior_size());
}
BENCHMARK(BM_GreenSolve)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PotentialExact(benchmark::State& state) {
    const PotentialKernel kernel(PotentialKernelConfig::exact_everywhere());
    int x = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel.exact({x, x / 3}));
        x = x % 60 + 1;
    }
}
BENCHMARK(BM_PotentialExact);

void BM_ArcMeasureBrownian(benchmark::State& state) {
    const auto g = build_geometry(0.0, 256);
    for (auto _ : state) benchmark::DoNotOptimize(bm_arc_measure(g, {3.0, 4.0}).total());
}
BENCHMARK(BM_ArcMeasureBrownian);

void BM_WalkExit(benchmark::State& state) {
    const auto d = build_lattice_domain(build_geometry(std::numbers::pi, static_cast<int>(state.range(0))));
    const long long budget = WalkRunConfig::default_step_budget(d);
    std::uint64_t trial = 0;
    std::uint64_t steps = 0;
    for (auto _ : state) {
        TrialRng rng(1, trial++);
        steps += simulate_exit(d, {0, 0}, rng, budget).steps;
    }
    state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_WalkExit)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
