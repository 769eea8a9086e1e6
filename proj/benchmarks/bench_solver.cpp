#include <benchmark/benchmark.h>

#include "hydrod/numerov.hpp"
#include "hydrod/shooting.hpp"

using namespace hydrod;

static void BM_NumerovPropagate(benchmark::State& state) {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, static_cast<int>(state.range(0)));
    double h = grid.spacing();
    std::vector<double> f(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k)
        f[k] = local_f(-0.5, grid.point(k), spec);
    for (auto _ : state) {
        auto u = numerov_propagate(f, h, 0.0, h, Direction::forward);
        benchmark::DoNotOptimize(u.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.n_points);
}
BENCHMARK(BM_NumerovPropagate)->Arg(5001)->Arg(20001)->Arg(80001);

static void BM_MatchingDefect(benchmark::State& state) {
    auto spec = make_problem(5, 1);
    auto grid = default_grid(spec);
    auto cfg = default_config(spec, grid);
    for (auto _ : state) {
        auto d = matching_defect(10.0, spec, grid, cfg);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_MatchingDefect);

static void BM_FindEigenvalue(benchmark::State& state) {
    auto spec = make_problem(static_cast<int>(state.range(0)), 1);
    auto grid = default_grid(spec);
    auto cfg = default_config(spec, grid);
    for (auto _ : state) {
        auto sol = find_eigenvalue(spec, grid, cfg, 0);
        benchmark::DoNotOptimize(sol.energy);
    }
}
BENCHMARK(BM_FindEigenvalue)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
