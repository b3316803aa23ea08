#include "pasecdeg/statistics.hpp"

#include "pasecdeg/generator.hpp"

#include <benchmark/benchmark.h>

using namespace pasecdeg;

static void BM_FromHistory(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto history = generate(n, 7);
    for (auto _ : state) {
        auto graph = MultiGraph::from_history(history);
        benchmark::DoNotOptimize(graph.edge_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_FromHistory)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_SecondDegrees(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto graph = MultiGraph::from_history(generate(n, 7));
    for (auto _ : state) {
        auto d2 = graph.second_degrees();
        benchmark::DoNotOptimize(d2.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SecondDegrees)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_JointCounts(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto graph = MultiGraph::from_history(generate(n, 7));
    for (auto _ : state) {
        auto counts = joint_counts(graph);
        benchmark::DoNotOptimize(counts.n);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_JointCounts)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
