#include "generators.hpp"

#include <decount/wsub.hpp>

#include <benchmark/benchmark.h>

using namespace decount;
using namespace decount::testing;

namespace {

// Sparse layered instances with roughly 4 * width edges per layer.
auto instance(int k, std::size_t width) -> LayeredWeightedGraph
{
    Rng rng(k * 1000 + width);
    return random_layered(k, width, 4.0 / static_cast<double>(width), 5, rng);
}

void wsub_kernel(benchmark::State & state, int k)
{
    auto lg = instance(k, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(wsub(lg, WSubEngine::Matrix));
    state.counters["edges"] = static_cast<double>(lg.num_edges());
    state.SetComplexityN(static_cast<std::int64_t>(lg.num_edges()));
}

void wsub_combinatorial_c4(benchmark::State & state)
{
    auto lg = instance(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(wsub_combinatorial(lg));
    state.SetComplexityN(static_cast<std::int64_t>(lg.num_edges()));
}

} // namespace

BENCHMARK_CAPTURE(wsub_kernel, c3, 3)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK_CAPTURE(wsub_kernel, c4, 4)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK_CAPTURE(wsub_kernel, c5, 5)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(wsub_combinatorial_c4)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
