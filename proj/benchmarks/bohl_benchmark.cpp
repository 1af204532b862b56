#include <benchmark/benchmark.h>

#include "bohl/laplace.hpp"
#include "bohl/parser.hpp"
#include "bohl/witness.hpp"
#include "support/random_bohl.hpp"

using namespace bohl;

static void BM_WitnessVerify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WitnessSpec spec = WitnessSpec::with_default_names(n, 1);
    BohlTuple f = bsr_witness(spec);
    BohlTuple g = bsr_witness_inverse(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bezout_verify(f, g));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WitnessVerify)->RangeMultiplier(4)->Range(1, 256)->Complexity();

static void BM_WitnessConstruct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    WitnessSpec spec = WitnessSpec::with_default_names(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bsr_witness(spec));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WitnessConstruct)->RangeMultiplier(4)->Range(1, 256)->Complexity();

static void BM_SparseMultiply(benchmark::State& state) {
    testing::Rng rng(1);
    testing::FunctionOptions opt;
    opt.max_terms = static_cast<int>(state.range(0));
    opt.max_power = 4;
    BohlFunction f = testing::random_nonzero_function(rng, opt);
    BohlFunction g = testing::random_nonzero_function(rng, opt);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SparseMultiply)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_LaplaceRoundTrip(benchmark::State& state) {
    testing::Rng rng(2);
    testing::FunctionOptions opt;
    opt.max_terms = 8;
    opt.max_power = 4;
    BohlFunction f = testing::random_nonzero_function(rng, opt);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse_laplace(laplace(f)));
    }
}
BENCHMARK(BM_LaplaceRoundTrip);

static void BM_ParseFormat(benchmark::State& state) {
    testing::Rng rng(3);
    testing::FunctionOptions opt;
    opt.max_terms = 8;
    BohlFunction f = testing::random_nonzero_function(rng, opt);
    std::string text = format(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lower_expression(text));
    }
}
BENCHMARK(BM_ParseFormat);

BENCHMARK_MAIN();
