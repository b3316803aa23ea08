#include "pasecdeg/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace pasecdeg;

static void BM_DpFloat(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto window = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        auto table = dp_expectations(n, window, window, window, OracleMode::float64);
        benchmark::DoNotOptimize(table.m1(2));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * window * window);
}
BENCHMARK(BM_DpFloat)
    ->Args({10000, 32})
    ->Args({10000, 64})
    ->Args({100000, 64})
    ->Unit(benchmark::kMillisecond);

static void BM_DpExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto table = dp_expectations(n, static_cast<std::uint32_t>(n + 1),
                                     static_cast<std::uint32_t>(2 * n),
                                     static_cast<std::uint32_t>(2 * n), OracleMode::exact);
        benchmark::DoNotOptimize(table.m1(2));
    }
}
BENCHMARK(BM_DpExact)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto table = enumerate_exact(n);
        benchmark::DoNotOptimize(table.m1(2));
    }
    state.SetItemsProcessed(
        state.iterations() * static_cast<std::int64_t>(double_factorial_histories(n)));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
