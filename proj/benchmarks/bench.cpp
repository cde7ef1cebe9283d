#include <benchmark/benchmark.h>

#include "esscoh/catalog.hpp"
#include "esscoh/resolution_oracle.hpp"
#include "esscoh/verifier.hpp"

using namespace esscoh;

// Degree bases are cached per ring object, so every iteration builds a
// fresh presentation to keep the measured work cold.

static void BM_degree_bases(benchmark::State& state) {
    const int top = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Presentation ring = presentation_of({Family::C, 5, 2});
        std::size_t total = 0;
        for (int d = 0; d <= top; ++d)
            total += ring.degree_basis(d).representatives.size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_degree_bases)->Arg(8)->Arg(16)->Arg(24);

static void BM_kernel_engine(benchmark::State& state) {
    const int top = static_cast<int>(state.range(0));
    const GroupSpec g{Family::C, 3, 2};
    for (auto _ : state) {
        Presentation ring = presentation_of(g);
        benchmark::DoNotOptimize(essential_by_kernels(g, ring, top));
    }
}
BENCHMARK(BM_kernel_engine)->Arg(8)->Arg(12)->Arg(16);

static void BM_h1_engine(benchmark::State& state) {
    const int top = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Presentation ring = presentation_of({Family::F, 2, 4});
        benchmark::DoNotOptimize(essential_by_h1(ring, top));
    }
}
BENCHMARK(BM_h1_engine)->Arg(8)->Arg(16)->Arg(24);

static void BM_full_verification(benchmark::State& state) {
    const GroupSpec g{Family::C, 3, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_theorem(g, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_full_verification)->Arg(8)->Arg(12)->Arg(16);

static void BM_resolution_betti(benchmark::State& state) {
    // order 64, the largest the concordance sweep touches
    const GroupSpec g{Family::C, 2, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            betti_numbers(g, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_resolution_betti)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
