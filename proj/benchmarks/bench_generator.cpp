#include "pasecdeg/generator.hpp"

#include <benchmark/benchmark.h>

using namespace pasecdeg;

static void BM_Generate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto history = generate(n, seed++);
        benchmark::DoNotOptimize(history.targets.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Generate)->Arg(100000)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_GenerateCollapsed(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto graph = generate_collapsed(n, 3, seed++);
        benchmark::DoNotOptimize(graph.vertex_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(3 * n));
}
BENCHMARK(BM_GenerateCollapsed)->Arg(100000)->Unit(benchmark::kMillisecond);
