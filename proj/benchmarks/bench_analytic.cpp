#include "pasecdeg/analytic.hpp"

#include <benchmark/benchmark.h>

using namespace pasecdeg;

static void BM_CTableFloat(benchmark::State& state) {
    const auto size = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto table = c_table(size, size, Mode::float64);
        benchmark::DoNotOptimize(table.value(1, 1));
    }
}
BENCHMARK(BM_CTableFloat)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_CTableExact(benchmark::State& state) {
    const auto size = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto table = c_table(size, size, Mode::exact);
        benchmark::DoNotOptimize(table.value(1, 1));
    }
}
BENCHMARK(BM_CTableExact)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_IdentityChecks(benchmark::State& state) {
    const auto size = static_cast<std::uint32_t>(state.range(0));
    const auto c = c_table(size, size, Mode::exact);
    const auto p = p_table(size, size, Mode::exact);
    for (auto _ : state) {
        auto report = identity_checks(c, p);
        benchmark::DoNotOptimize(report.total_residual);
    }
}
BENCHMARK(BM_IdentityChecks)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
