#include <benchmark/benchmark.h>

#include "speiser/curvature.hpp"
#include "speiser/generators.hpp"
#include "speiser/potential.hpp"
#include "speiser/speiser.hpp"

using namespace speiser;

static void BM_Ball(benchmark::State& state) {
    const auto g = make_family("tr-hexagon").oracle;
    const int r = static_cast<int>(state.range(0));
    std::size_t n = 0;
    for (auto _ : state) {
        Ball b = ball(*g, g->seed(), r);
        n = b.size();
        benchmark::DoNotOptimize(b.faces.data());
    }
    state.counters["vertices"] = static_cast<double>(n);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Ball)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_MeanExcessProfile(benchmark::State& state) {
    const auto g = make_family("tr-hexagon").oracle;
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MeanExcessProfile p = mean_excess_profile(*g, g->seed(), r);
        benchmark::DoNotOptimize(p.records.back().average);
    }
}
BENCHMARK(BM_MeanExcessProfile)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_HexagonLayers(benchmark::State& state) {
    const auto g = std::static_pointer_cast<const TrHexagonOracle>(gen_tr_hexagon());
    for (auto _ : state) {
        BfsLayers l = tr_hexagon_layers(*g, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(l.vertices.data());
    }
}
BENCHMARK(BM_HexagonLayers)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ResistanceExact(benchmark::State& state) {
    const auto g = make_family("tree-3").oracle;
    SolverOptions opt;
    opt.mode = SolverMode::ExactRational;
    for (auto _ : state) benchmark::DoNotOptimize(resistance_to_sphere(*g, g->seed(), static_cast<int>(state.range(0)), opt).value);
}
BENCHMARK(BM_ResistanceExact)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ResistanceIterative(benchmark::State& state) {
    const auto g = make_family("grid-z2").oracle;
    SolverOptions opt;
    opt.mode = SolverMode::Iterative;
    for (auto _ : state) benchmark::DoNotOptimize(resistance_to_sphere(*g, g->seed(), static_cast<int>(state.range(0)), opt).value);
}
BENCHMARK(BM_ResistanceIterative)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_RandomWalk(benchmark::State& state) {
    const auto g = make_family("grid-z2").oracle;
    for (auto _ : state) benchmark::DoNotOptimize(random_walk_escape(*g, g->seed(), 10, 10'000, 1).p_hat);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 10'000);
}
BENCHMARK(BM_RandomWalk)->Unit(benchmark::kMillisecond);

static void BM_CurvatureGrid(benchmark::State& state) {
    GridSpec spec;
    spec.h = 1.0 / static_cast<double>(state.range(0));
    spec.r_max = 6;
    const std::vector<double> radii{2, 4, 6};
    for (auto _ : state) {
        GridDiscretization grid(spec);
        CurvatureReport rep = curvature_report(grid, kBasepoint, radii);
        state.counters["nodes"] = static_cast<double>(rep.nodes);
        benchmark::DoNotOptimize(rep.records.back().ratio);
    }
}
BENCHMARK(BM_CurvatureGrid)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
