#include <benchmark/benchmark.h>

#include "vecpack/embed.hpp"
#include "vecpack/fixtures.hpp"

namespace {

using namespace vecpack;

void BM_FullEmbedding(benchmark::State& state) {
    fixtures::Rng rng(5);
    const auto s = fixtures::random_simple_family(rng, 3, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(full_embedding(s));
}
BENCHMARK(BM_FullEmbedding)->DenseRange(8, 20, 6);

void BM_VerifyEmbedding(benchmark::State& state) {
    fixtures::Rng rng(6);
    const auto s = fixtures::random_simple_family(rng, 3, 2, static_cast<int>(state.range(0)));
    const auto f = full_embedding(s).embedding;
    for (auto _ : state) benchmark::DoNotOptimize(verify_embedding(s, f, {}));
}
BENCHMARK(BM_VerifyEmbedding)->DenseRange(8, 14, 3);

}  // namespace
