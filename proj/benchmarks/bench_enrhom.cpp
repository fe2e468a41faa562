#include <benchmark/benchmark.h>

#include <random>

#include "enrhom/classify.hpp"
#include "enrhom/enriched.hpp"
#include "enrhom/generators.hpp"
#include "enrhom/homology.hpp"

using namespace enrhom;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::gf(2);

void BM_ReducedBettiTorusQ(benchmark::State& state) {
    const auto torus = gen::torus_seven();
    for (auto _ : state) {
        auto b = reduced_betti(torus, kQ);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_ReducedBettiTorusQ);

void BM_ReducedBettiTorusF2(benchmark::State& state) {
    const auto torus = gen::torus_seven();
    for (auto _ : state) {
        auto b = reduced_betti(torus, kF2);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_ReducedBettiTorusF2);

void BM_RankCyclicTopBoundary(benchmark::State& state) {
    const auto k = gen::cyclic_polytope_boundary(static_cast<int>(state.range(0)), 4);
    const auto m = boundary_matrix(k, 3, kQ);
    for (auto _ : state) {
        int r = rank(m, kQ);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RankCyclicTopBoundary)->Arg(8)->Arg(10)->Arg(12);

void BM_EnrichedTableCycle(benchmark::State& state) {
    const auto c = gen::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BettiCache cache;
        auto t = enriched_homology(c, 1, kQ, cache);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_EnrichedTableCycle)->Arg(6)->Arg(8)->Arg(10);

void BM_GirthCycle(benchmark::State& state) {
    const auto c = gen::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int g = girth(c, kQ);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_GirthCycle)->Arg(8)->Arg(12)->Arg(16);

void BM_ClassifyTorus(benchmark::State& state) {
    const auto torus = gen::torus_seven();
    for (auto _ : state) {
        BettiCache cache;
        auto rep = classify(torus, kQ, {}, cache);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ClassifyTorus);

void BM_AlexanderDualRandom(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::vector<SimplicialComplex> ks;
    for (int i = 0; i < 32; ++i) ks.push_back(gen::random_complex(10, 12, rng));
    size_t i = 0;
    for (auto _ : state) {
        auto d = ks[i++ % ks.size()].alexander_dual();
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_AlexanderDualRandom);

}  // namespace

BENCHMARK_MAIN();
