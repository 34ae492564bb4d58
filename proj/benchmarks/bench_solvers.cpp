#include <benchmark/benchmark.h>

#include "vecpack/fixtures.hpp"
#include "vecpack/graph.hpp"
#include "vecpack/solve.hpp"

namespace {

using namespace vecpack;

void BM_VbpExact(benchmark::State& state) {
    fixtures::Rng rng(1);
    const auto inst = fixtures::random_instance(rng, ProblemKind::VBP, static_cast<int>(state.range(0)), 2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(solve::vbp(inst, solve::VbpMode::Exact));
}
BENCHMARK(BM_VbpExact)->DenseRange(6, 12, 3);

void BM_VbpFirstFitDecreasing(benchmark::State& state) {
    fixtures::Rng rng(1);
    const auto inst = fixtures::random_instance(rng, ProblemKind::VBP, static_cast<int>(state.range(0)), 4, 8);
    for (auto _ : state) benchmark::DoNotOptimize(solve::vbp(inst, solve::VbpMode::FirstFitDecreasing));
}
BENCHMARK(BM_VbpFirstFitDecreasing)->Range(16, 1024);

void BM_VsExact(benchmark::State& state) {
    fixtures::Rng rng(2);
    const auto inst = fixtures::random_instance(rng, ProblemKind::VS, static_cast<int>(state.range(0)), 2, 4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve::vs(inst, solve::VsMode::Exact));
}
BENCHMARK(BM_VsExact)->DenseRange(6, 10, 2);

void BM_VbcExact(benchmark::State& state) {
    fixtures::Rng rng(3);
    const auto inst = fixtures::random_instance(rng, ProblemKind::VBC, static_cast<int>(state.range(0)), 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve::vbc(inst, solve::VbcMode::Exact));
}
BENCHMARK(BM_VbcExact)->DenseRange(6, 10, 2);

void BM_MinimaxMonoClique(benchmark::State& state) {
    fixtures::Rng rng(4);
    const auto g = fixtures::random_graph(rng, static_cast<int>(state.range(0)), 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(minimax_mono_clique(g, 2));
}
BENCHMARK(BM_MinimaxMonoClique)->DenseRange(6, 10, 2);

}  // namespace
