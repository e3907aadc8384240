#include <benchmark/benchmark.h>

#include <random>

#include "arithgraph/critical.hpp"
#include "arithgraph/families.hpp"
#include "arithgraph/snf.hpp"

using namespace arithgraph;

namespace {

IntMatrix random_square(std::mt19937_64& rng, std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 19) - 9;
    return m;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const IntMatrix m = random_square(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto snf = smith_normal_form(m);
        benchmark::DoNotOptimize(snf.d);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_CriticalGroupWheel(benchmark::State& state) {
    const ArithStructure st = natural_structure(wheel_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        CriticalGroup k = critical_group(st);
        benchmark::DoNotOptimize(k.order());
    }
}
BENCHMARK(BM_CriticalGroupWheel)->Arg(8)->Arg(12)->Arg(16);

static void BM_SolveInteger(benchmark::State& state) {
    const ArithStructure st = natural_structure(wheel_graph(static_cast<int>(state.range(0))));
    const IntMatrix l = laplacian(st);
    IntVec f(st.graph.vertex_count());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<long>(i) - 3;
    const IntVec b = l * f;
    for (auto _ : state) {
        auto x = solve_integer(l, b);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_SolveInteger)->Arg(8)->Arg(12);

static void BM_EnumerateStructures(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto found = enumerate_structures(g, 3);
        benchmark::DoNotOptimize(found.size());
    }
}
BENCHMARK(BM_EnumerateStructures)->Arg(4)->Arg(5)->Arg(6);

static void BM_EnumerateHarmonicMorphisms(benchmark::State& state) {
    const Graph w5 = wheel_graph(5);
    const Graph c3 = cycle_graph(3, "x");
    for (auto _ : state) {
        auto found = enumerate_harmonic_morphisms(w5, c3, false);
        benchmark::DoNotOptimize(found.size());
    }
}
BENCHMARK(BM_EnumerateHarmonicMorphisms);

static void BM_InducedPushforward(benchmark::State& state) {
    const Graph w7 = wheel_graph(7);
    const Graph k4 = complete_graph(4, "x");
    const HarmonicData h =
        require_harmonic(GraphMorphism::build_indexed(w7, k4, {0, 1, 2, 3, 1, 2, 3}));
    const ArithStructure st1 = validate_structure(k4, ivec({1, 1, 1, 3}), ivec({5, 5, 5, 1}));
    const CriticalGroup k1 = critical_group(st1);
    const CriticalGroup k2 = critical_group(pullback_structure(h, st1));
    for (auto _ : state) {
        GroupHom hom = induced_pushforward(h, k2, k1);
        benchmark::DoNotOptimize(hom.matrix);
    }
}
BENCHMARK(BM_InducedPushforward);

BENCHMARK_MAIN();
