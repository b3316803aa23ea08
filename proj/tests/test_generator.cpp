#include "pasecdeg/generator.hpp"

#include "pasecdeg/oracle.hpp"
#include "pasecdeg/rng.hpp"
#include "pasecdeg/statistics.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

using namespace pasecdeg;

TEST_CASE("generate reference histories") {
    // Frozen from an independent implementation of the slot process.
    CHECK(generate(12, 1).targets ==
          std::vector<Vertex>{1, 2, 1, 3, 1, 3, 7, 4, 1, 2, 10, 4});
    CHECK(generate(12, 2).targets ==
          std::vector<Vertex>{1, 1, 2, 1, 2, 2, 2, 6, 2, 2, 2, 8});
    CHECK(generate(12, mix_seed(1, 0)).targets ==
          std::vector<Vertex>{1, 1, 1, 4, 3, 1, 3, 1, 4, 3, 1, 1});
}

TEST_CASE("generate edge cases and determinism") {
    CHECK(generate(0, 7).targets.empty());
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL})
        CHECK(generate(1, seed).targets == std::vector<Vertex>{1});
    const auto a = generate(1000, 31337);
    const auto b = generate(1000, 31337);
    CHECK(a.targets == b.targets);
    CHECK(generate(1000, 31338).targets != a.targets);
}

TEST_CASE("generated histories are valid and satisfy the handshake identity") {
    const std::size_t n = 100000;
    const auto h = generate(n, 5);
    h.validate();
    const auto g = MultiGraph::from_history(h);
    Count sum = 0;
    for (Vertex v = 1; v <= n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * n);
}

TEST_CASE("attach step state invariant") {
    GeneratorState state(17);
    for (std::size_t t = 1; t <= 500; ++t) {
        const Vertex target = state.attach_step();
        CHECK(target >= 1);
        CHECK(target <= t);
    }
    CHECK(state.slots().size() == 1000);
    // vertex v occupies exactly d(v) slots
    std::map<Vertex, Count> slot_count;
    for (const Vertex v : state.slots()) ++slot_count[v];
    AttachmentHistory h;
    GeneratorState replay(17);
    for (std::size_t t = 1; t <= 500; ++t) h.targets.push_back(replay.attach_step());
    const auto g = MultiGraph::from_history(h);
    for (Vertex v = 1; v <= 500; ++v) CHECK(slot_count[v] == g.degree(v));
}

TEST_CASE("loop probability at step two matches 1/3") {
    const int runs = 100000;
    int loops = 0;
    for (int r = 0; r < runs; ++r) {
        const auto h = generate(2, mix_seed(91, r));
        if (h.targets[1] == 2) ++loops;
    }
    const double freq = static_cast<double>(loops) / runs;
    const double tol = 5.0 * std::sqrt((2.0 / 9.0) / runs);
    CHECK(std::abs(freq - 1.0 / 3.0) < tol);
}

TEST_CASE("joint counts at n=5 match enumeration within 5 standard errors") {
    const std::size_t runs = 1000000;
    const auto truth = enumerate_exact(5);
    const std::uint32_t lmax = truth.lmax(), kmax = truth.kmax();
    const std::size_t w = kmax + 1;
    std::vector<std::uint64_t> sumN((lmax + 1) * w, 0), sqN((lmax + 1) * w, 0);
    std::vector<std::uint64_t> sumP((lmax + 1) * w, 0), sqP((lmax + 1) * w, 0);
    std::vector<std::uint32_t> rowN((lmax + 1) * w), rowP((lmax + 1) * w);
    for (std::size_t r = 0; r < runs; ++r) {
        std::fill(rowN.begin(), rowN.end(), 0);
        std::fill(rowP.begin(), rowP.end(), 0);
        const auto g = MultiGraph::from_history(generate(5, mix_seed(2718, r)));
        const auto counts = joint_counts(g);
        for (const auto& [cell, c] : counts.N) rowN[cell.first * w + cell.second] += c;
        for (const auto& [cell, c] : counts.P) rowP[cell.first * w + cell.second] += c;
        for (std::size_t i = 0; i < rowN.size(); ++i) {
            sumN[i] += rowN[i];
            sqN[i] += static_cast<std::uint64_t>(rowN[i]) * rowN[i];
            sumP[i] += rowP[i];
            sqP[i] += static_cast<std::uint64_t>(rowP[i]) * rowP[i];
        }
    }
    const auto check_cell = [&](double expected, std::uint64_t sum, std::uint64_t sumsq) {
        const double mean = static_cast<double>(sum) / runs;
        const double var =
            (static_cast<double>(sumsq) - runs * mean * mean) / (runs - 1.0);
        const double se = std::sqrt(std::max(var, 0.0) / runs);
        if (se == 0.0) {
            CHECK(mean == expected);
        } else {
            CHECK(std::abs(mean - expected) < 5.0 * se);
        }
    };
    for (std::uint32_t l = 1; l <= lmax; ++l) {
        for (std::uint32_t k = 0; k <= kmax; ++k) {
            check_cell(truth.en(l, k), sumN[l * w + k], sqN[l * w + k]);
            check_cell(truth.ep(l, k), sumP[l * w + k], sqP[l * w + k]);
        }
    }
}

TEST_CASE("generate_collapsed") {
    // m=1 is the identity collapse of the same stream
    const auto direct = MultiGraph::from_history(generate(100, 12));
    const auto collapsed = generate_collapsed(100, 1, 12);
    CHECK(collapsed.vertex_count() == direct.vertex_count());
    for (Vertex v = 1; v <= 100; ++v) CHECK(collapsed.degree(v) == direct.degree(v));

    const auto tiny = generate_collapsed(1, 2, 5);
    CHECK(tiny.vertex_count() == 1);
    CHECK(tiny.edge_count() == 2);
    CHECK(tiny.degree(1) == 4);

    const auto g = generate_collapsed(10000, 3, 77);
    CHECK(g.vertex_count() == 10000);
    CHECK(g.edge_count() == 30000);

    CHECK_THROWS_AS(generate_collapsed(5, 0, 1), std::invalid_argument);
}
