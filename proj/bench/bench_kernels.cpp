// Parallel kernels against their serial references.

#include "pdell/reference.hpp"

#include <benchmark/benchmark.h>

using namespace pdell;

static void BM_Lines(benchmark::State& state) {
    const Prime p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_lines(p));
}

static void BM_LinesReference(benchmark::State& state) {
    const Prime p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_lines(p));
}

static void BM_Census(benchmark::State& state) {
    const Prime p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(isotropic_line_stats(p));
}

static void BM_CensusReference(benchmark::State& state) {
    const Prime p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::isotropic_line_stats(p));
}

static void BM_Certificate(benchmark::State& state) {
    const Constraint drop[] = {Constraint::Divisibility};
    for (auto _ : state) benchmark::DoNotOptimize(smoothness_certificate(state.range(0), state.range(1), drop));
}

static void BM_CertificateReference(benchmark::State& state) {
    const Constraint drop[] = {Constraint::Divisibility};
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::smoothness_certificate(state.range(0), state.range(1), drop));
}

BENCHMARK(BM_Lines)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_LinesReference)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_Census)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_CensusReference)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_Certificate)->Args({4, 6})->Args({8, 6})->Args({12, 10});
BENCHMARK(BM_CertificateReference)->Args({4, 6})->Args({8, 6})->Args({12, 10});

BENCHMARK_MAIN();
