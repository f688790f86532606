#include "generators.hpp"

#include <decount/fixtures.hpp>
#include <decount/pipeline.hpp>

#include <benchmark/benchmark.h>

using namespace decount;
using namespace decount::testing;

namespace {

void cycles(benchmark::State & state)
{
    int k = static_cast<int>(state.range(0));
    Rng rng(99);
    auto g = bounded_degeneracy(static_cast<std::size_t>(state.range(1)), 3, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_cycles(g, k));
    state.SetComplexityN(state.range(1));
}

void classify(benchmark::State & state)
{
    auto h = cycle_pattern(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_pattern(h, 5));
}

void session_all_small_patterns(benchmark::State & state)
{
    Rng rng(5);
    auto g = bounded_degeneracy(2000, 3, rng);
    std::vector<Pattern> patterns;
    for (int n = 2; n <= 5; ++n)
        for (auto & h : connected_patterns(n))
            patterns.push_back(h);
    for (auto _ : state) {
        CountingSession session(g);
        for (const auto & h : patterns)
            benchmark::DoNotOptimize(session.sub(h));
    }
}

} // namespace

BENCHMARK(cycles)->ArgsProduct({{3, 4, 5, 6}, {1000, 4000, 16000}})->Unit(benchmark::kMillisecond);
BENCHMARK(cycles)->ArgsProduct({{8}, {1000, 4000}})->Unit(benchmark::kMillisecond);
BENCHMARK(cycles)->Args({10, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(classify)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(session_all_small_patterns)->Unit(benchmark::kMillisecond);
