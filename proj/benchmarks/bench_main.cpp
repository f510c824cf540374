#include "qshift/canonical_fill.hpp"
#include "qshift/classify.hpp"
#include "qshift/qpoly.hpp"
#include "qshift/shapes.hpp"
#include "qshift/tableaux.hpp"
#include "qshift/words.hpp"

#include <benchmark/benchmark.h>

using namespace qshift;

namespace {

const SkewShape& worked_example()
{
    static const SkewShape s = make_skew({7, 5, 3, 2, 1}, {4, 1});
    return s;
}

void BM_EnumerateGsyt(benchmark::State& state)
{
    const SkewShape s = make_skew({6, 4, 2}, {2});
    const int max_letter = static_cast<int>(state.range(0));
    std::size_t count = 0;
    for (auto _ : state) {
        count = 0;
        enumerate_gsyt(s, max_letter, [&](const Tableau&) { return ++count, true; });
        benchmark::DoNotOptimize(count);
    }
    state.counters["tableaux"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateGsyt)->Arg(2)->Arg(3)->Arg(4);

void BM_CountAmenable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(count_amenable(worked_example()));
}
BENCHMARK(BM_CountAmenable);

void BM_Decompose(benchmark::State& state)
{
    const SkewShape s = make_skew({6, 5, 3, 1}, {3, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(s));
}
BENCHMARK(BM_Decompose);

void BM_CanonicalFilling(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_filling(worked_example()));
}
BENCHMARK(BM_CanonicalFilling);

void BM_IsAmenable(benchmark::State& state)
{
    const Word w = row_word(canonical_filling(worked_example()));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_amenable(w));
}
BENCHMARK(BM_IsAmenable);

void BM_ExpandQ(benchmark::State& state)
{
    const SkewShape s = make_skew({6, 4, 2, 1}, {3});
    const int nvars = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(expand_q(s, nvars));
}
BENCHMARK(BM_ExpandQ)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyDecomposition(benchmark::State& state)
{
    const SkewShape s = make_skew({6, 4, 2}, {3});
    for (auto _ : state) {
        StraightExpansionCache cache;
        benchmark::DoNotOptimize(verify_decomposition(s, &cache));
    }
}
BENCHMARK(BM_VerifyDecomposition)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state)
{
    const SkewShape s = make_skew({9, 7, 4, 3, 1}, {6, 4, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(canonicalize(s));
}
BENCHMARK(BM_Canonicalize);

void BM_MatchFamily(benchmark::State& state)
{
    const SkewShape s = make_skew({8, 7, 6, 5, 4, 3, 2, 1}, {5, 3, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(match_family(s));
}
BENCHMARK(BM_MatchFamily);

void BM_Sweep(benchmark::State& state)
{
    const int max_size = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(max_size, 1));
}
BENCHMARK(BM_Sweep)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SkewClasses(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_skew_class(n, n, [&](const SkewShape&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SkewClasses)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
