// Acceptance suite: runs each criterion at its stated tolerance and prints
// one PASS/FAIL line. `--criterion N` runs a single criterion (exit 0/1);
// without arguments all ten run and the exit code is the failure count.
//
// Criteria 2 and 4 are implemented exactly as stated and FAIL for provable
// reasons: the strict bounds they check are attained or overshot at boundary
// cases. Their ctest entries are registered WILL_FAIL; the detail lines
// carry the analysis.
#include "pasecdeg/analytic.hpp"
#include "pasecdeg/experiments.hpp"
#include "pasecdeg/generator.hpp"
#include "pasecdeg/oracle.hpp"
#include "pasecdeg/statistics.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace pasecdeg;
using json = nlohmann::json;

namespace {

constexpr std::uint64_t kMcSeed = 20260808;          // criterion 7
constexpr std::uint64_t kConcentrationSeed = 20260809; // criterion 8
constexpr std::uint64_t kTheorem1Seed = 20260810;     // criterion 9
constexpr std::uint32_t kThreads = 2;

struct Result {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// 1. DP and enumeration agree exactly for n = 1..7.
Result criterion1() {
    const auto start = Clock::now();
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto report = dp_vs_enum(n, OracleMode::exact);
        if (!report.exact_identical || !report.uncovered.empty())
            return {false, fmt("exact tables differ at n=%zu (max diff %.3e)", n,
                               report.max_abs_diff)};
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) return {false, fmt("runtime %.1f s exceeds 60 s", elapsed)};
    return {true, fmt("identical EN/EP/M1 tables for n=1..7 over (2n-1)!! histories "
                      "(%.1f s)", elapsed)};
}

// 2. Lemma 1 strict bound |M1 d(d+1)(d+2)/(4n) - 1| < d^2/n for every d.
Result criterion2() {
    const auto report = bound_checks({10, 100, 1000, 10000}, {}, {});
    bool pass = true;
    std::string detail;
    for (const auto& c : report.lemma1) {
        pass = pass && c.pass;
        detail += fmt("n=%zu worst %.12f at d=%u; ", c.n, c.worst_margin, c.worst_d);
    }
    if (!pass)
        detail += "analysis: M1_n(1) = 2(n-1)/3 exactly, so |theta~(n,1)| = 1/n and the "
                  "STRICT bound '< d^2/n' is attained with equality at d=1 "
                  "(all d >= 2 pass with margin <= 0.31)";
    return {pass, detail};
}

// 3. Theorem 4 bound on every cell with c(l,k) > 0, l <= 20, k <= 30.
Result criterion3() {
    const auto start = Clock::now();
    const auto report = bound_checks({}, {100, 1000}, {});
    bool pass = true;
    std::string detail;
    for (const auto& c : report.theorem4) {
        pass = pass && c.pass;
        detail += fmt("n=%zu worst %.4f at (l=%u,k=%u); ", c.n, c.worst_margin, c.worst_l,
                      c.worst_k);
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 300.0) return {false, fmt("runtime %.1f s exceeds 5 min", elapsed)};
    detail += fmt("(%.1f s)", elapsed);
    return {pass, detail};
}

// 4. Lemma 2: EP <= p on cells with n >= 2l+k, plus the documented n=2 case.
Result criterion4() {
    const auto report = bound_checks({}, {}, {10, 100, 1000});
    bool pass = true;
    std::string detail;
    for (const auto& c : report.lemma2) {
        pass = pass && c.pass;
        detail += fmt("n=%zu: %zu violating cells of %llu in scope (worst ratio %.4f); ",
                      c.n, c.violations.size(),
                      static_cast<unsigned long long>(c.scope_cells), c.worst_ratio);
    }
    const bool exception_ok =
        std::abs(report.small_n_exception_ep - 2.0 / 3.0) < 1e-15 &&
        std::abs(report.small_n_exception_p - 0.5) < 1e-15;
    detail += fmt("documented n=2 boundary case reproduced: E P_2(3,0) = %.6f > p(3,0) = "
                  "%.2f (reported, not a failure); ",
                  report.small_n_exception_ep, report.small_n_exception_p);
    if (!exception_ok) return {false, detail + "n=2 exception NOT reproduced"};
    if (!pass)
        detail += "analysis: the n >= 2l+k guard is insufficient — the boundary "
                  "entry (l-1)!/(2l-3)!! exceeds p(l,0) by ~sqrt(pi*l)/2 and the excess "
                  "outlives n = 2l+k (exact-arithmetic witness: E P_100(30,25) = "
                  "1.00151*p(30,25))";
    return {pass, detail};
}

// 5. Analytic identities at Lmax = Kmax = 300 in exact mode.
Result criterion5() {
    const auto start = Clock::now();
    const auto c = c_table(300, 300, Mode::exact);
    const auto p = p_table(300, 300, Mode::exact);
    const auto report = identity_checks(c, p);
    const double elapsed = seconds_since(start);
    const bool total_ok = report.total_residual <= 1e-6;
    const bool rows_ok = report.worst_row_residual() <= 1e-6;
    const bool z_ok = report.worst_z_residual() < 1e-9;
    const bool p_ok = report.p_bound_violations == 0;
    const bool time_ok = elapsed < 120.0;
    const bool pass = total_ok && rows_ok && z_ok && p_ok && time_ok;
    return {pass,
            fmt("total residual %.3e (<=1e-6 %s), worst row residual %.3e (<=1e-6 %s), "
                "worst z residual %.3e (<1e-9 %s), p-bound violations %llu, %.1f s",
                report.total_residual, total_ok ? "ok" : "FAIL",
                report.worst_row_residual(), rows_ok ? "ok" : "FAIL",
                report.worst_z_residual(), z_ok ? "ok" : "FAIL",
                static_cast<unsigned long long>(report.p_bound_violations), elapsed)};
}

// 6. Theorem 2 at desk scale: n = 1e6, float64 DP, 64x64 window.
Result criterion6() {
    const auto report = theorem2_report(1000000, 40, "dp");
    bool within = true;
    double worst_excess = 0;
    std::uint32_t worst_k = 0;
    for (const auto& row : report.rows) {
        if (row.k < 10) continue;
        const double excess = std::abs(row.ratio - 1.0) - row.envelope;
        if (excess > worst_excess) {
            worst_excess = excess;
            worst_k = row.k;
        }
        within = within && row.within;
    }
    if (!within)
        return {false, fmt("ratio outside 1 +/- 5(ln^2 k/k + k^2/n) at k=%u", worst_k)};

    // Golden pilot comparison: the DP is deterministic, so recorded ratios
    // must reproduce.
    const std::string golden_path = std::string(PA_SECDEG_GOLDEN_DIR) + "/theorem2_n1e6.json";
    std::ifstream in(golden_path);
    if (!in.good()) return {false, "missing golden file " + golden_path};
    json golden;
    in >> golden;
    for (const auto& row : golden["rows"]) {
        const std::uint32_t k = row["k"];
        const double want = row["ratio"];
        for (const auto& have : report.rows) {
            if (have.k != k) continue;
            if (std::abs(have.ratio - want) > 1e-9 * std::max(1.0, std::abs(want)))
                return {false, fmt("ratio at k=%u drifted from golden: %.12f vs %.12f", k,
                                   have.ratio, want)};
        }
    }
    double r10 = 0, r40 = 0;
    for (const auto& row : report.rows) {
        if (row.k == 10) r10 = row.ratio;
        if (row.k == 40) r40 = row.ratio;
    }
    return {true, fmt("k^2 M2/(4n) in envelope for k=10..40 (ratio %.3f -> %.3f), matches "
                      "golden pilot", r10, r40)};
}

// 7. Monte-Carlo consistency against DP at n = 1e5.
Result criterion7() {
    const auto start = Clock::now();
    ExperimentConfig cfg;
    cfg.n = 100000;
    cfg.replicates = 100;
    cfg.kmax = 20;
    cfg.dmax = 20;
    cfg.seed = kMcSeed;
    cfg.threads = kThreads;
    const auto mc = monte_carlo(cfg);
    const auto dp = dp_expectations(cfg.n, 64, cfg.kmax, 64, OracleMode::float64);
    double worst_sigma = 0;
    std::string worst_what = "-";
    for (std::uint32_t k = 1; k <= 20; ++k) {
        const auto s = mc.x_stats(k);
        const double want = dp.second_degree_expectation(k);
        if (s.se == 0) {
            if (s.mean != want) return {false, fmt("X(%u): zero spread but mean != dp", k)};
            continue;
        }
        const double sigmas = std::abs(s.mean - want) / s.se;
        if (sigmas > worst_sigma) {
            worst_sigma = sigmas;
            worst_what = fmt("X(%u)", k);
        }
    }
    for (std::uint32_t d = 1; d <= 20; ++d) {
        const auto s = mc.deg_stats(d);
        const double want = dp.m1(d);
        if (s.se == 0) {
            if (s.mean != want) return {false, fmt("deg(%u): zero spread but mean != dp", d)};
            continue;
        }
        const double sigmas = std::abs(s.mean - want) / s.se;
        if (sigmas > worst_sigma) {
            worst_sigma = sigmas;
            worst_what = fmt("deg(%u)", d);
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 600.0) return {false, fmt("runtime %.1f s exceeds 10 min", elapsed)};
    const bool pass = worst_sigma < 5.0;
    return {pass, fmt("worst |mean - dp| = %.2f standard errors at %s (limit 5), R=100, "
                      "%.1f s", worst_sigma, worst_what.c_str(), elapsed)};
}

// 8. Concentration: no k sqrt(n) ln^2 n exceedances and a non-worsening CV.
Result criterion8() {
    const auto high = concentration_report(100000, 10, 200, kConcentrationSeed, kThreads);
    const auto low = concentration_report(10000, 10, 200, kConcentrationSeed + 1, kThreads);
    for (const auto& row : high.rows)
        if (row.exceed_count != 0)
            return {false, fmt("%u replicates exceeded the deviation threshold at k=%u",
                               row.exceed_count, row.k)};
    double worst_slackful = -1e9;
    std::uint32_t worst_k = 0;
    for (std::uint32_t k = 1; k <= 10; ++k) {
        const double cv_hi = high.rows[k - 1].cv;
        const double cv_lo = low.rows[k - 1].cv;
        const double se_hi = bootstrap_cv_se(high.replicate_x, k, 1000, 101 + k);
        const double se_lo = bootstrap_cv_se(low.replicate_x, k, 1000, 201 + k);
        const double slack = 2.0 * std::sqrt(se_hi * se_hi + se_lo * se_lo);
        const double overshoot = cv_hi - cv_lo - slack;
        if (overshoot > worst_slackful) {
            worst_slackful = overshoot;
            worst_k = k;
        }
    }
    const bool pass = worst_slackful <= 0;
    return {pass, fmt("zero threshold exceedances (k<=10, R=200); CV(1e5) <= CV(1e4) + 2 "
                      "bootstrap SE, worst overshoot %.4f at k=%u", worst_slackful,
                      worst_k)};
}

// 9. Theorem 1 for collapsed graphs, m in {2,3}.
Result criterion9() {
    std::string detail;
    for (const std::uint32_t m : {2u, 3u}) {
        const auto report =
            theorem1_report(100000, m, 10, 50, kTheorem1Seed + m, kThreads, 0.10);
        double worst = 0;
        for (const auto& row : report.rows) {
            worst = std::max(worst, row.rel_error);
            if (!row.within)
                return {false, fmt("m=%u d=%u mean %.1f vs 2nm(m+1)/(d(d+1)(d+2)) = %.1f "
                                   "(off by %.1f%%)", m, row.d, row.mean, row.expected,
                                   100 * row.rel_error)};
        }
        detail += fmt("m=%u worst relative error %.2f%% (limit 10%%); ", m, 100 * worst);
    }
    return {true, detail + "R=50, d=m..10"};
}

// 10. Engineering targets: generate 1e7 under 5 s, all second degrees under 10 s.
Result criterion10() {
    const auto t0 = Clock::now();
    const auto history = generate(10000000, 1);
    const double gen_time = seconds_since(t0);

    const auto t1 = Clock::now();
    const auto graph = MultiGraph::from_history(history);
    const auto d2 = graph.second_degrees();
    const double d2_time = seconds_since(t1);

    std::uint64_t checksum = 0;
    for (const auto v : d2) checksum += v;
    const bool pass = gen_time < 5.0 && d2_time < 10.0 && d2.size() == 10000000;
    return {pass, fmt("generate %.2f s (<5), build+second degrees %.2f s (<10), "
                      "sum d2 = %llu", gen_time, d2_time,
                      static_cast<unsigned long long>(checksum))};
}

Result run_criterion(int n) {
    switch (n) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        case 10: return criterion10();
        default: return {false, "unknown criterion"};
    }
}

const char* kNames[] = {
    "oracle equivalence (dp == enumeration, exact, n=1..7)",
    "Lemma 1 degree-law bound, every d, n in {10,1e2,1e3,1e4}",
    "Theorem 4 bound on EN(l,k), n in {100,1000}, l<=20, k<=30",
    "Lemma 2: EP(l,k) <= p(l,k) on n >= 2l+k, n in {10,100,1000}",
    "analytic identities at 300x300, exact arithmetic",
    "Theorem 2 ratio envelope at n=1e6 (dp, 64x64 window)",
    "Monte-Carlo vs dp at n=1e5 (R=100, 5 SE)",
    "concentration: deviation threshold and CV trend (R=200)",
    "Theorem 1 degree law of G_m^n, m in {2,3} (R=50, 10%)",
    "performance: generate 1e7 < 5 s, second degrees < 10 s",
};

int report_one(int n) {
    const auto start = Clock::now();
    const Result r = run_criterion(n);
    std::printf("criterion %2d: %s (%.1f s) — %s — %s\n", n, r.pass ? "PASS" : "FAIL",
                seconds_since(start), kNames[n - 1], r.detail.c_str());
    std::fflush(stdout);
    return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc == 3 && std::string(argv[1]) == "--criterion")
        return report_one(std::atoi(argv[2]));
    if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }
    int failures = 0;
    for (int n = 1; n <= 10; ++n) failures += report_one(n);
    std::printf("%d of 10 criteria passed (criteria 2 and 4 fail by design of the "
                "checked bounds; see the detail lines)\n", 10 - failures);
    return failures;
}
