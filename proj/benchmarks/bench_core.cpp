#include <benchmark/benchmark.h>

#include "bhseq/bhseq.hpp"

using namespace bhseq;

// Full a_0..a_k prefix; the last term dominates.
static void BM_GreedySequence(benchmark::State& state) {
    const auto h = static_cast<unsigned>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(greedy_sequence(h, k).terms.back());
}
BENCHMARK(BM_GreedySequence)->Args({2, 20})->Args({3, 8})->Args({8, 5})->Args({24, 4})->Unit(benchmark::kMillisecond);

static void BM_GreedyParallel(benchmark::State& state) {
    GreedyOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(greedy_sequence(3, 8, opts).terms.back());
}
BENCHMARK(BM_GreedyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

// One admissibility test against a fixed prefix, sweeping candidates.
static void BM_Admissible(benchmark::State& state) {
    const auto h = static_cast<unsigned>(state.range(0));
    const auto rec = greedy_sequence(h, 4);
    const auto table = build_support_table(rec.terms, h);
    Element b = rec.terms.back() + 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(admissible(table, b));
        if (++b > 4 * rec.terms.back()) b = rec.terms.back() + 1;
    }
}
BENCHMARK(BM_Admissible)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_BuildSupportTable(benchmark::State& state) {
    const auto h = static_cast<unsigned>(state.range(0));
    const auto terms = greedy_sequence(h, 5).terms;
    for (auto _ : state) benchmark::DoNotOptimize(build_support_table(terms, h).memory_bytes());
}
BENCHMARK(BM_BuildSupportTable)->Arg(2)->Arg(4)->Arg(8);

static void BM_CollisionWitness(benchmark::State& state) {
    const auto h = static_cast<unsigned>(state.range(0));
    const Element c = closed_form_term(h, 4) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(collision_witness(h, c));
}
BENCHMARK(BM_CollisionWitness)->Arg(4)->Arg(8)->Arg(16);

static void BM_MinUnblocked(benchmark::State& state) {
    const auto h = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(min_unblocked(h));
}
BENCHMARK(BM_MinUnblocked)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Lemma1Family(benchmark::State& state) {
    const auto h = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lemma1_interval_family(h).merged_union.size());
}
BENCHMARK(BM_Lemma1Family)->Arg(10)->Arg(50);

BENCHMARK_MAIN();
