#include <benchmark/benchmark.h>

#include "quiver/bipartitize.hpp"
#include "quiver/generate.hpp"
#include "quiver/verify.hpp"

namespace {

quiver::Quiver sample(int n, std::uint64_t seed) {
    return quiver::random_acyclic({n, 0.4, 3, seed});
}

void BM_Mutate(benchmark::State& state) {
    const quiver::Quiver q = sample(static_cast<int>(state.range(0)), 1);
    int k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quiver::mutate(q, k));
        k = (k + 1) % q.vertex_count();
    }
}
BENCHMARK(BM_Mutate)->Arg(8)->Arg(32)->Arg(128);

void BM_PathProfile(benchmark::State& state) {
    const quiver::Quiver q = sample(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(quiver::path_profile(q));
}
BENCHMARK(BM_PathProfile)->Arg(8)->Arg(32)->Arg(128);

void BM_Bipartitize(benchmark::State& state) {
    const quiver::Quiver q = sample(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(quiver::bipartitize(q));
}
BENCHMARK(BM_Bipartitize)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_Certify(benchmark::State& state) {
    const quiver::Quiver q = sample(static_cast<int>(state.range(0)), 4);
    const auto [trace, report] = quiver::bipartitize(q);
    for (auto _ : state)
        benchmark::DoNotOptimize(quiver::certify(q, trace));
}
BENCHMARK(BM_Certify)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
