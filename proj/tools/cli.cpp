#include "cli.hpp"

#include "pasecdeg/analytic.hpp"
#include "pasecdeg/edge_io.hpp"
#include "pasecdeg/experiments.hpp"
#include "pasecdeg/generator.hpp"
#include "pasecdeg/oracle.hpp"
#include "pasecdeg/statistics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pasecdeg::cli {

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

void diag(const std::string& level, const std::string& where, const std::string& message,
          const json& data = json()) {
    json line{{"level", level}, {"where", where}, {"message", message}};
    if (!data.is_null()) line["data"] = data;
    std::cerr << line.dump() << "\n";
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint32_t resolve_threads(std::uint32_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PA_SECDEG_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::uint32_t>(v);
    }
    return 1;
}

std::vector<std::size_t> parse_grid(const std::string& csv) {
    std::vector<std::size_t> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) grid.push_back(std::stoull(item));
    }
    return grid;
}

// ---- generate ----

struct GenerateArgs {
    std::size_t n = 0;
    std::uint32_t m = 1;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const GenerateArgs& a) {
    if (a.m == 1) {
        const auto history = generate(a.n, a.seed);
        std::ostringstream os;
        write_edge_list(history, os);
        write_output(os.str(), a.out);
    } else {
        const auto graph = generate_collapsed(a.n, a.m, a.seed);
        std::ostringstream os;
        write_edge_list(graph, os);
        write_output(os.str(), a.out);
    }
    return kExitOk;
}

// ---- stats ----

struct StatsArgs {
    std::string in;
    std::string format = "csv";
    std::string out;
};

int run_stats(const StatsArgs& a) {
    const auto graph = read_multigraph_file(a.in);
    const auto counts = joint_counts(graph);
    if (a.format == "csv") {
        std::string text = "# pa-secdeg v1\nkind,l,k,count\n";
        char buf[128];
        for (const auto& [cell, c] : counts.N) {
            std::snprintf(buf, sizeof buf, "N,%llu,%llu,%llu\n",
                          static_cast<unsigned long long>(cell.first),
                          static_cast<unsigned long long>(cell.second),
                          static_cast<unsigned long long>(c));
            text += buf;
        }
        for (const auto& [cell, c] : counts.P) {
            std::snprintf(buf, sizeof buf, "P,%llu,%llu,%llu\n",
                          static_cast<unsigned long long>(cell.first),
                          static_cast<unsigned long long>(cell.second),
                          static_cast<unsigned long long>(c));
            text += buf;
        }
        for (const auto& [d, c] : counts.degree_hist) {
            std::snprintf(buf, sizeof buf, "deg,,%llu,%llu\n",
                          static_cast<unsigned long long>(d),
                          static_cast<unsigned long long>(c));
            text += buf;
        }
        for (const auto& [k, c] : counts.secdeg_hist) {
            std::snprintf(buf, sizeof buf, "secdeg,,%llu,%llu\n",
                          static_cast<unsigned long long>(k),
                          static_cast<unsigned long long>(c));
            text += buf;
        }
        write_output(text, a.out);
    } else {
        json rows = json::array();
        for (const auto& [cell, c] : counts.N)
            rows.push_back(json{{"kind", "N"}, {"l", cell.first}, {"k", cell.second}, {"count", c}});
        for (const auto& [cell, c] : counts.P)
            rows.push_back(json{{"kind", "P"}, {"l", cell.first}, {"k", cell.second}, {"count", c}});
        for (const auto& [d, c] : counts.degree_hist)
            rows.push_back(json{{"kind", "deg"}, {"k", d}, {"count", c}});
        for (const auto& [k, c] : counts.secdeg_hist)
            rows.push_back(json{{"kind", "secdeg"}, {"k", k}, {"count", c}});
        json doc{{"version", "pa-secdeg v1"},
                 {"kind", "stats"},
                 {"n", counts.n},
                 {"rows", std::move(rows)}};
        write_output(doc.dump(2) + "\n", a.out);
    }
    return kExitOk;
}

// ---- analytic ----

struct AnalyticArgs {
    std::string table; // set by subcommand
    std::uint32_t lmax = 64, kmax = 64;
    std::string mode = "auto";
    bool check = false;
    double total_tol = 1e-6, row_tol = 1e-6, z_tol = 1e-9;
    std::string out;
};

int run_analytic(const AnalyticArgs& a) {
    // auto: exact rationals up to 200x200, float64 for larger windows
    const Mode mode = a.mode == "auto"
                          ? (std::max(a.lmax, a.kmax) <= 200 ? Mode::exact : Mode::float64)
                          : (a.mode == "exact" ? Mode::exact : Mode::float64);
    const bool want_c = a.table == "ctable";
    const auto table = want_c ? c_table(a.lmax, a.kmax, mode) : p_table(a.lmax, a.kmax, mode);

    std::string text = "# pa-secdeg v1\nl,k,value\n";
    char buf[160];
    for (std::uint32_t l = want_c ? 1 : 2; l <= a.lmax; ++l) {
        for (std::uint32_t k = 0; k <= a.kmax; ++k) {
            if (mode == Mode::exact) {
                text += std::to_string(l) + "," + std::to_string(k) + "," +
                        table.exact(l, k).to_string() + "\n";
            } else {
                std::snprintf(buf, sizeof buf, "%u,%u,%.17g\n", l, k, table.value(l, k));
                text += buf;
            }
        }
    }
    write_output(text, a.out);

    if (!a.check) return kExitOk;
    const auto c = want_c ? table : c_table(a.lmax, a.kmax, mode);
    const auto p = want_c ? p_table(std::max<std::uint32_t>(a.lmax, 2), a.kmax, mode) : table;
    const auto report = identity_checks(c, p);
    const bool ok = report.total_residual <= a.total_tol &&
                    report.worst_row_residual() <= a.row_tol &&
                    report.worst_z_residual() <= a.z_tol && report.p_bound_violations == 0;
    diag(ok ? "check" : "error", "analytic",
         ok ? "identity checks passed" : "identity checks FAILED",
         json{{"total_residual", report.total_residual},
              {"worst_row_residual", report.worst_row_residual()},
              {"worst_z_residual", report.worst_z_residual()},
              {"p_bound_violations", report.p_bound_violations},
              {"tolerances",
               {{"total", a.total_tol}, {"row", a.row_tol}, {"z", a.z_tol}}}});
    return ok ? kExitOk : kExitCheckFailed;
}

// ---- oracle ----

struct OracleArgs {
    std::string action; // dp | enum | diff
    std::size_t n = 1;
    std::uint32_t lmax = 0, kmax = 0, dmax = 0; // 0 = full window
    std::string mode = "exact";
    std::size_t cap = kDefaultEnumerationCap;
    std::string out;
};

std::string expectation_csv(const ExpectationTable& t) {
    const bool exact = t.mode() == OracleMode::exact;
    std::string text = "# pa-secdeg v1\nkind,l,k,value\n";
    char buf[160];
    for (std::uint32_t l = 1; l <= t.lmax(); ++l) {
        for (std::uint32_t k = 0; k <= t.kmax(); ++k) {
            if (exact) {
                text += "EN," + std::to_string(l) + "," + std::to_string(k) + "," +
                        t.en_exact(l, k).to_string() + "\n";
            } else {
                std::snprintf(buf, sizeof buf, "EN,%u,%u,%.17g\n", l, k, t.en(l, k));
                text += buf;
            }
        }
    }
    for (std::uint32_t l = 2; l <= t.lmax(); ++l) {
        for (std::uint32_t k = 0; k <= t.kmax(); ++k) {
            if (exact) {
                text += "EP," + std::to_string(l) + "," + std::to_string(k) + "," +
                        t.ep_exact(l, k).to_string() + "\n";
            } else {
                std::snprintf(buf, sizeof buf, "EP,%u,%u,%.17g\n", l, k, t.ep(l, k));
                text += buf;
            }
        }
    }
    for (std::uint32_t d = 1; d <= t.dmax(); ++d) {
        if (exact) {
            text += "M1,," + std::to_string(d) + "," + t.m1_exact(d).to_string() + "\n";
        } else {
            std::snprintf(buf, sizeof buf, "M1,,%u,%.17g\n", d, t.m1(d));
            text += buf;
        }
    }
    return text;
}

int run_oracle(const OracleArgs& a) {
    const OracleMode mode = a.mode == "exact" ? OracleMode::exact : OracleMode::float64;
    if (a.action == "dp") {
        if ((a.lmax == 0 || a.kmax == 0) && a.n > 4096)
            throw std::invalid_argument(
                "oracle dp: full windows at n=" + std::to_string(a.n) +
                " would need ~n^2 cells; pass explicit --lmax/--kmax");
        const std::uint32_t lmax = a.lmax ? a.lmax : static_cast<std::uint32_t>(a.n + 1);
        const std::uint32_t kmax = a.kmax ? a.kmax : static_cast<std::uint32_t>(2 * a.n);
        const std::uint32_t dmax = a.dmax ? a.dmax : std::max(kmax, lmax);
        const auto t = dp_expectations(a.n, lmax, kmax, dmax, mode);
        write_output(expectation_csv(t), a.out);
        return kExitOk;
    }
    if (a.action == "enum") {
        const auto t = enumerate_exact(a.n, a.cap);
        write_output(expectation_csv(t), a.out);
        return kExitOk;
    }
    // diff
    const auto report = dp_vs_enum(a.n, mode, a.cap);
    const bool ok = (mode == OracleMode::exact)
                        ? report.exact_identical
                        : report.max_abs_diff < 1e-12;
    json data{{"n", report.n},
              {"max_abs_diff", report.max_abs_diff},
              {"exact_identical", report.exact_identical},
              {"uncovered_cells", report.uncovered.size()}};
    if (report.max_abs_diff > 0)
        data["worst"] = json{{"kind", std::string(1, report.worst.kind)},
                             {"l", report.worst.l},
                             {"k", report.worst.k},
                             {"dp", report.worst.dp},
                             {"enum", report.worst.enumeration}};
    diag(ok ? "check" : "error", "oracle.diff",
         ok ? "dp and enumeration agree" : "dp and enumeration DISAGREE", data);
    std::string text = "# pa-secdeg v1\nn,max_abs_diff,exact_identical,uncovered\n" +
                       std::to_string(report.n) + "," + std::to_string(report.max_abs_diff) +
                       "," + (report.exact_identical ? "1" : "0") + "," +
                       std::to_string(report.uncovered.size()) + "\n";
    write_output(text, a.out);
    return ok ? kExitOk : kExitCheckFailed;
}

// ---- mc ----

struct McArgs {
    ExperimentConfig cfg;
    std::string format = "csv";
    std::string out;
    bool compare_dp = false;
    std::uint32_t dp_lmax = 64;
};

int run_mc(const McArgs& a) {
    ExperimentConfig cfg = a.cfg;
    cfg.threads = resolve_threads(cfg.threads);
    auto report = monte_carlo(cfg);
    if (a.compare_dp) {
        const auto dp = dp_expectations(cfg.n, a.dp_lmax,
                                        cfg.kmax, std::max(cfg.kmax, std::max(a.dp_lmax, cfg.dmax)),
                                        OracleMode::float64);
        report.attach_dp(dp);
    }
    write_output(a.format == "json" ? report.to_json() : report.to_csv(), a.out);
    return kExitOk;
}

// ---- report ----

struct ReportArgs {
    std::string which;
    std::size_t n = 100000;
    std::uint32_t m = 2;
    std::uint32_t reps = 50;
    std::uint32_t kmax = 20;
    std::uint32_t dmax = 10;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint32_t threads = 0;
    std::string source = "dp";
    std::uint32_t lmax = 64;
    double envelope_c = 5.0;
    double tolerance = 0.10;
    std::size_t compare_n = 0;
    std::string lemma1_grid = "10,100,1000,10000";
    std::string theorem4_grid = "100,1000";
    std::string lemma2_grid = "10,100,1000";
    std::string format = "json";
    std::string out;
};

int run_report(const ReportArgs& a) {
    const std::uint32_t threads = resolve_threads(a.threads);
    if (a.which == "theorem1") {
        const auto report =
            theorem1_report(a.n, a.m, a.dmax, a.reps, a.seed, threads, a.tolerance);
        write_output(a.format == "csv" ? report.to_csv() : report.to_json(), a.out);
        bool ok = true;
        for (const auto& row : report.rows) ok = ok && row.within;
        diag(ok ? "check" : "error", "report.theorem1",
             ok ? "all degrees within tolerance" : "degree law check FAILED",
             json{{"n", a.n}, {"m", a.m}, {"tolerance", a.tolerance}});
        return ok ? kExitOk : kExitCheckFailed;
    }
    if (a.which == "theorem2") {
        Theorem2Options options;
        options.lmax = a.lmax;
        options.envelope_constant = a.envelope_c;
        options.replicates = a.reps;
        options.seed = a.seed;
        options.threads = threads;
        const auto report = theorem2_report(a.n, a.kmax, a.source, options);
        write_output(a.format == "csv" ? report.to_csv() : report.to_json(), a.out);
        bool ok = true;
        for (const auto& row : report.rows) ok = ok && row.within;
        diag(ok ? "check" : "error", "report.theorem2",
             ok ? "ratios within envelope" : "second-degree law check FAILED",
             json{{"n", a.n}, {"kmax", a.kmax}, {"source", a.source}});
        return ok ? kExitOk : kExitCheckFailed;
    }
    if (a.which == "concentration") {
        const auto report = concentration_report(a.n, a.kmax, a.reps, a.seed, threads);
        write_output(a.format == "csv" ? report.to_csv() : report.to_json(), a.out);
        bool ok = true;
        for (const auto& row : report.rows) ok = ok && row.exceed_count == 0;
        json data{{"n", a.n}, {"replicates", a.reps}};
        if (a.compare_n) {
            const auto low = concentration_report(a.compare_n, a.kmax, a.reps, a.seed, threads);
            json trend = json::array();
            for (std::uint32_t k = 1; k <= a.kmax; ++k) {
                const double cv_hi = report.rows[k - 1].cv;
                const double cv_lo = low.rows[k - 1].cv;
                const double se_hi = bootstrap_cv_se(report.replicate_x, k, 1000, 7771);
                const double se_lo = bootstrap_cv_se(low.replicate_x, k, 1000, 7772);
                const double slack = 2.0 * std::sqrt(se_hi * se_hi + se_lo * se_lo);
                const bool row_ok = cv_hi <= cv_lo + slack;
                ok = ok && row_ok;
                trend.push_back(json{{"k", k},
                                     {"cv_high_n", cv_hi},
                                     {"cv_low_n", cv_lo},
                                     {"slack", slack},
                                     {"ok", row_ok}});
            }
            data["cv_trend"] = std::move(trend);
        }
        diag(ok ? "check" : "error", "report.concentration",
             ok ? "concentration checks passed" : "concentration check FAILED", data);
        return ok ? kExitOk : kExitCheckFailed;
    }
    // bounds
    const auto report = bound_checks(parse_grid(a.lemma1_grid), parse_grid(a.theorem4_grid),
                                     parse_grid(a.lemma2_grid));
    write_output(a.format == "csv" ? report.to_csv() : report.to_json(), a.out);
    bool ok = true;
    for (const auto& c : report.lemma1) ok = ok && c.pass;
    for (const auto& c : report.theorem4) ok = ok && c.pass;
    for (const auto& c : report.lemma2) ok = ok && c.pass;
    diag(ok ? "check" : "error", "report.bounds",
         ok ? "all checked bounds hold on the grids" : "bound check FAILED",
         json{{"small_n_exception",
               {{"ep_2_3_0", report.small_n_exception_ep},
                {"p_3_0", report.small_n_exception_p}}}});
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Preferential-attachment multigraphs: exact second-degree "
                 "expectations, analytic tables, and Monte-Carlo checks"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "Sample a graph and write its edge list");
    cmd_gen->add_option("--n", gen.n, "Vertex count")->required();
    cmd_gen->add_option("--m", gen.m, "Block size (m>1 writes the collapsed graph)")
        ->default_val(1);
    cmd_gen->add_option("--seed", gen.seed, "RNG seed")->required();
    cmd_gen->add_option("--out", gen.out, "Output file (default stdout)");

    StatsArgs stats;
    auto* cmd_stats = app.add_subcommand("stats", "Census of an edge-list file");
    cmd_stats->add_option("--in", stats.in, "Input edge-list file")->required();
    cmd_stats->add_option("--format", stats.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    cmd_stats->add_option("--out", stats.out, "Output file (default stdout)");

    AnalyticArgs analytic;
    auto* cmd_analytic =
        app.add_subcommand("analytic", "Evaluate the c(l,k) / p(l,k) constant tables");
    cmd_analytic->require_subcommand(1);
    auto* cmd_ct = cmd_analytic->add_subcommand("ctable", "Constants c(l,k)");
    auto* cmd_pt = cmd_analytic->add_subcommand("ptable", "Bounds p(l,k)");
    for (auto* sub : {cmd_ct, cmd_pt}) {
        sub->add_option("--lmax", analytic.lmax, "Rows")->default_val(64);
        sub->add_option("--kmax", analytic.kmax, "Columns")->default_val(64);
        sub->add_option("--mode", analytic.mode,
                        "Arithmetic (auto: exact up to 200x200, float beyond)")
            ->check(CLI::IsMember({"exact", "float", "auto"}))
            ->default_val("auto");
        sub->add_flag("--check", analytic.check, "Run identity checks (exit 2 on failure)");
        sub->add_option("--total-tol", analytic.total_tol, "Total-sum tolerance")
            ->default_val(1e-6);
        sub->add_option("--row-tol", analytic.row_tol, "Row-sum tolerance")->default_val(1e-6);
        sub->add_option("--z-tol", analytic.z_tol, "Column-identity tolerance")
            ->default_val(1e-9);
        sub->add_option("--out", analytic.out, "Output file (default stdout)");
    }

    OracleArgs oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "Exact expectation tables");
    cmd_oracle->require_subcommand(1);
    auto* cmd_dp = cmd_oracle->add_subcommand("dp", "Dynamic programming over the recurrences");
    auto* cmd_enum = cmd_oracle->add_subcommand("enum", "Brute-force history enumeration");
    auto* cmd_diff = cmd_oracle->add_subcommand("diff", "Compare dp against enumeration");
    for (auto* sub : {cmd_dp, cmd_enum, cmd_diff}) {
        sub->add_option("--n", oracle.n, "Vertex count")->required();
        sub->add_option("--out", oracle.out, "Output file (default stdout)");
    }
    cmd_dp->add_option("--lmax", oracle.lmax, "Degree window (0 = full)")->default_val(0);
    cmd_dp->add_option("--kmax", oracle.kmax, "Second-degree window (0 = full)")->default_val(0);
    cmd_dp->add_option("--dmax", oracle.dmax, "M1 window (0 = full)")->default_val(0);
    for (auto* sub : {cmd_dp, cmd_diff})
        sub->add_option("--mode", oracle.mode, "Arithmetic")
            ->check(CLI::IsMember({"exact", "float"}))
            ->default_val("exact");
    for (auto* sub : {cmd_enum, cmd_diff})
        sub->add_option("--cap", oracle.cap, "Enumeration cap")->default_val(8);

    McArgs mc;
    auto* cmd_mc = app.add_subcommand("mc", "Monte-Carlo replicate summary");
    cmd_mc->add_option("--n", mc.cfg.n, "Vertex count")->required();
    cmd_mc->add_option("--m", mc.cfg.m, "Block size")->default_val(1);
    cmd_mc->add_option("--reps", mc.cfg.replicates, "Replicates")->required();
    cmd_mc->add_option("--seed", mc.cfg.seed, "Base seed")->required();
    cmd_mc->add_option("--kmax", mc.cfg.kmax, "Second-degree window")->default_val(64);
    cmd_mc->add_option("--dmax", mc.cfg.dmax, "Degree window")->default_val(64);
    cmd_mc->add_option("--offset", mc.cfg.replicate_offset, "Replicate index offset")
        ->default_val(0);
    cmd_mc->add_option("--threads", mc.cfg.threads,
                       "Worker threads (default: PA_SECDEG_THREADS or 1)")
        ->default_val(0);
    cmd_mc->add_flag("--compare-dp", mc.compare_dp, "Attach DP expectation columns");
    cmd_mc->add_option("--format", mc.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    cmd_mc->add_option("--out", mc.out, "Output file (default stdout)");

    ReportArgs report;
    auto* cmd_report = app.add_subcommand("report", "Theorem-level reports");
    cmd_report->require_subcommand(1);
    auto* cmd_t1 = cmd_report->add_subcommand("theorem1", "Degree power law of G_m^n");
    auto* cmd_t2 = cmd_report->add_subcommand("theorem2", "Second-degree law 4n/k^2");
    auto* cmd_conc = cmd_report->add_subcommand("concentration", "Deviation and CV of X_n(k)");
    auto* cmd_bounds = cmd_report->add_subcommand("bounds", "Lemma/theorem error bounds");
    for (auto* sub : {cmd_t1, cmd_t2, cmd_conc, cmd_bounds}) {
        sub->add_option("--format", report.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->default_val("json");
        sub->add_option("--out", report.out, "Output file (default stdout)");
        sub->add_option("--threads", report.threads,
                        "Worker threads (default: PA_SECDEG_THREADS or 1)")
            ->default_val(0);
    }
    cmd_t1->add_option("--n", report.n, "Vertex count")->required();
    cmd_t1->add_option("--m", report.m, "Block size")->required();
    cmd_t1->add_option("--reps", report.reps, "Replicates")->default_val(50);
    cmd_t1->add_option("--dmax", report.dmax, "Largest degree")->default_val(10);
    cmd_t1->add_option("--seed", report.seed, "Base seed")->required();
    cmd_t1->add_option("--tol", report.tolerance, "Relative tolerance")->default_val(0.10);

    cmd_t2->add_option("--n", report.n, "Vertex count")->required();
    cmd_t2->add_option("--kmax", report.kmax, "Largest k")->default_val(40);
    cmd_t2->add_option("--source", report.source, "Expectation source")
        ->check(CLI::IsMember({"dp", "mc"}))
        ->default_val("dp");
    cmd_t2->add_option("--lmax", report.lmax, "DP degree truncation")->default_val(64);
    cmd_t2->add_option("--c", report.envelope_c, "Envelope constant")->default_val(5.0);
    cmd_t2->add_option("--reps", report.reps, "Replicates (mc source)")->default_val(100);
    cmd_t2->add_option("--seed", report.seed, "Base seed (mc source)")
        ->each([&report](const std::string&) { report.seed_set = true; });

    cmd_conc->add_option("--n", report.n, "Vertex count")->required();
    cmd_conc->add_option("--reps", report.reps, "Replicates")->default_val(200);
    cmd_conc->add_option("--kmax", report.kmax, "Largest k")->default_val(10);
    cmd_conc->add_option("--seed", report.seed, "Base seed")->required();
    cmd_conc->add_option("--compare-n", report.compare_n,
                         "Also run at this n and check the CV trend")
        ->default_val(0);

    cmd_bounds->add_option("--lemma1-grid", report.lemma1_grid, "n grid for the M1 bound")
        ->default_val("10,100,1000,10000");
    cmd_bounds->add_option("--theorem4-grid", report.theorem4_grid, "n grid for the EN bound")
        ->default_val("100,1000");
    cmd_bounds->add_option("--lemma2-grid", report.lemma2_grid, "n grid for EP <= p")
        ->default_val("10,100,1000");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return kExitOk;
        }
        diag("error", "cli", e.what());
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_stats->parsed()) return run_stats(stats);
        if (cmd_analytic->parsed()) {
            analytic.table = cmd_ct->parsed() ? "ctable" : "ptable";
            return run_analytic(analytic);
        }
        if (cmd_oracle->parsed()) {
            oracle.action = cmd_dp->parsed() ? "dp" : (cmd_enum->parsed() ? "enum" : "diff");
            return run_oracle(oracle);
        }
        if (cmd_mc->parsed()) return run_mc(mc);
        if (cmd_report->parsed()) {
            report.which = cmd_t1->parsed()     ? "theorem1"
                           : cmd_t2->parsed()   ? "theorem2"
                           : cmd_conc->parsed() ? "concentration"
                                                : "bounds";
            if (report.which == "theorem2" && report.source == "mc" && !report.seed_set) {
                diag("error", "cli", "--seed is required with --source mc");
                return kExitUsage;
            }
            return run_report(report);
        }
    } catch (const std::exception& e) {
        diag("error", "cli", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace pasecdeg::cli
