#include <benchmark/benchmark.h>

#include <surfcut/cutgraph.hpp>
#include <surfcut/generator.hpp>
#include <surfcut/mortar.hpp>
#include <surfcut/pipeline.hpp>
#include <surfcut/scdecomp.hpp>

using namespace surfcut;

namespace {

EmbeddedGraph instance(int genus, int n) {
    return generate_instance({genus, n, WeightModel::Uniform, 9, 7});
}

void BM_Generate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(instance(2, n));
}
BENCHMARK(BM_Generate)->Arg(50)->Arg(200)->Arg(500);

void BM_BaselineCutGraph(benchmark::State& state) {
    auto g = instance(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(baseline_cut_graph(g));
}
BENCHMARK(BM_BaselineCutGraph)->Arg(50)->Arg(200)->Arg(500);

void BM_Mortar(benchmark::State& state) {
    auto g = instance(2, static_cast<int>(state.range(0)));
    auto params = derive_params(2, make_rational(1, 2), 2);
    params.theta = 8;
    for (auto _ : state) benchmark::DoNotOptimize(build_mortar(g, params));
}
BENCHMARK(BM_Mortar)->Arg(50)->Arg(200)->Arg(500);

void BM_BuildScd(benchmark::State& state) {
    auto g = generate_instance({2, 3, WeightModel::Uniform, 9, 1});
    auto poly = polyhedralize(g, baseline_cut_graph(g).length * 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_scd(poly.map));
}
BENCHMARK(BM_BuildScd);

void BM_Pipeline(benchmark::State& state) {
    auto g = instance(2, static_cast<int>(state.range(0)));
    PipelineOptions opts;
    opts.epsilon = make_rational(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, opts));
}
BENCHMARK(BM_Pipeline)->Arg(50)->Arg(200)->Arg(500);

} // namespace

BENCHMARK_MAIN();
