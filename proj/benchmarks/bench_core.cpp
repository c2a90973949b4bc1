#include <benchmark/benchmark.h>

#include "symclass/components.hpp"
#include "symclass/path.hpp"
#include "symclass/sampling.hpp"

using namespace symclass;

namespace {

WonenburgerTriple sample_triple() {
    Rng rng(77);
    return random_triple(StratumLabel::E2, rng);
}

void BM_CharPolyTriple(benchmark::State& state) {
    const WonenburgerTriple t = sample_triple();
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_triple(t));
}
BENCHMARK(BM_CharPolyTriple);

void BM_Eigs4x4(benchmark::State& state) {
    const Mat m = assemble(sample_triple());
    for (auto _ : state) benchmark::DoNotOptimize(eigs(m, 1e-9));
}
BENCHMARK(BM_Eigs4x4);

void BM_NormalForm(benchmark::State& state) {
    const WonenburgerTriple t = sample_triple();
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(t));
}
BENCHMARK(BM_NormalForm);

void BM_ClassifyBase(benchmark::State& state) {
    const BasePoint p{0.37, -0.52};
    for (auto _ : state) benchmark::DoNotOptimize(classify_base(p));
}
BENCHMARK(BM_ClassifyBase);

void BM_BuildComponentGraph(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_component_graph(Quotient::SpI));
}
BENCHMARK(BM_BuildComponentGraph);

void BM_StabilityCheck(benchmark::State& state) {
    const Mat m = assemble(sample_triple());
    for (auto _ : state) benchmark::DoNotOptimize(stability_check(m));
}
BENCHMARK(BM_StabilityCheck);

void BM_AnalyzePath(benchmark::State& state) {
    std::vector<std::pair<double, WonenburgerTriple>> fam;
    for (int i = 0; i < 200; ++i) {
        const double th1 = 2.0 + 0.0004 * i;
        fam.emplace_back(i * 0.005,
                         seed_triple(StratumLabel::E2, {th1, 1.0}, "--"));
    }
    for (auto _ : state) benchmark::DoNotOptimize(analyze_path(fam, 6));
}
BENCHMARK(BM_AnalyzePath);

}  // namespace

BENCHMARK_MAIN();
