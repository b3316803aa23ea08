#include "pasecdeg/experiments.hpp"

#include "pasecdeg/generator.hpp"
#include "pasecdeg/rng.hpp"
#include "pasecdeg/statistics.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pasecdeg {

namespace {

using json = nlohmann::json;

// Runs fn(i) for i in [0, count) on up to `threads` workers. Work items are
// claimed from a shared counter; callers must write results into
// index-addressed slots so the outcome does not depend on scheduling.
void run_parallel(std::size_t count, std::uint32_t threads,
                  const std::function<void(std::size_t)>& fn) {
    const std::uint32_t workers =
        std::max<std::uint32_t>(1, std::min<std::uint32_t>(threads,
                                                           static_cast<std::uint32_t>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct ReplicateCounts {
    std::vector<std::uint64_t> x, deg, nmarg, pmarg;
};

ReplicateCounts replicate_counts(const ExperimentConfig& cfg, std::uint64_t seed) {
    ReplicateCounts counts;
    counts.x.assign(cfg.kmax + 1, 0);
    counts.deg.assign(cfg.dmax + 1, 0);
    counts.nmarg.assign(cfg.kmax + 1, 0);
    counts.pmarg.assign(cfg.kmax + 1, 0);
    const MultiGraph graph =
        cfg.m == 1 ? MultiGraph::from_history(generate(cfg.n, seed))
                   : generate_collapsed(cfg.n, cfg.m, seed);
    const JointCounts census = joint_counts(graph);
    for (const auto& [k, c] : census.secdeg_hist)
        if (k <= cfg.kmax) counts.x[k] += c;
    for (const auto& [d, c] : census.degree_hist)
        if (d <= cfg.dmax) counts.deg[d] += c;
    for (const auto& [cell, c] : census.N)
        if (cell.second <= cfg.kmax) counts.nmarg[cell.second] += c;
    for (const auto& [cell, c] : census.P)
        if (cell.second <= cfg.kmax) counts.pmarg[cell.second] += c;
    return counts;
}

json config_json(const ExperimentConfig& c) {
    return json{{"n", c.n},           {"m", c.m},
                {"replicates", c.replicates}, {"kmax", c.kmax},
                {"dmax", c.dmax},     {"seed", c.seed},
                {"threads", c.threads}, {"replicate_offset", c.replicate_offset}};
}

} // namespace

void MonteCarloReport::Accum::init(std::size_t size) {
    sum.assign(size, 0);
    sumsq.assign(size, 0);
    min.assign(size, UINT64_MAX);
    max.assign(size, 0);
}

void MonteCarloReport::Accum::fold(const std::vector<std::uint64_t>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        sum[i] += row[i];
        sumsq[i] += static_cast<unsigned __int128>(row[i]) * row[i];
        min[i] = std::min(min[i], row[i]);
        max[i] = std::max(max[i], row[i]);
    }
}

SummaryStats MonteCarloReport::Accum::stats(std::uint32_t i, std::uint32_t replicates) const {
    SummaryStats s;
    const double r = replicates;
    s.mean = static_cast<double>(sum.at(i)) / r;
    if (replicates > 1) {
        // R*sumsq - sum^2 is exact in 128-bit; variance = that / (R(R-1)).
        const unsigned __int128 rs = static_cast<unsigned __int128>(replicates) * sumsq.at(i);
        const unsigned __int128 s2 =
            static_cast<unsigned __int128>(sum.at(i)) * sum.at(i);
        const double numerator =
            rs >= s2 ? static_cast<double>(rs - s2) : -static_cast<double>(s2 - rs);
        s.stddev = std::sqrt(std::max(0.0, numerator / (r * (r - 1))));
        s.se = s.stddev / std::sqrt(r);
    }
    s.min = min.at(i);
    s.max = max.at(i);
    return s;
}

SummaryStats MonteCarloReport::x_stats(std::uint32_t k) const {
    return x_.stats(k, config_.replicates);
}
SummaryStats MonteCarloReport::deg_stats(std::uint32_t d) const {
    return deg_.stats(d, config_.replicates);
}
SummaryStats MonteCarloReport::nmarg_stats(std::uint32_t k) const {
    return nmarg_.stats(k, config_.replicates);
}
SummaryStats MonteCarloReport::pmarg_stats(std::uint32_t k) const {
    return pmarg_.stats(k, config_.replicates);
}

const std::vector<std::vector<std::uint64_t>>& MonteCarloReport::replicate_x() const {
    if (!config_.keep_replicates)
        throw std::logic_error("MonteCarloReport: replicate rows were not kept");
    return replicate_x_;
}

void MonteCarloReport::attach_dp(const ExpectationTable& dp) {
    dp_x_.assign(config_.kmax + 1, 0.0);
    dp_m1_.assign(config_.dmax + 1, 0.0);
    closed_m1_.assign(config_.dmax + 1, 0.0);
    for (std::uint32_t k = 0; k <= config_.kmax && k <= dp.kmax(); ++k)
        dp_x_[k] = dp.second_degree_expectation(k);
    for (std::uint32_t d = 1; d <= config_.dmax && d <= dp.dmax(); ++d)
        dp_m1_[d] = dp.m1(d);
    // degree-law closed form: 2nm(m+1)/(d(d+1)(d+2)), which is 4n/(...) at m=1
    for (std::uint32_t d = 1; d <= config_.dmax; ++d)
        closed_m1_[d] = 2.0 * static_cast<double>(config_.n) * config_.m * (config_.m + 1) /
                        (static_cast<double>(d) * (d + 1) * (d + 2));
}

MonteCarloReport monte_carlo(const ExperimentConfig& config) {
    if (config.replicates < 1)
        throw std::invalid_argument("monte_carlo: needs at least one replicate");
    if (config.n < 1 || config.m < 1)
        throw std::invalid_argument("monte_carlo: n and m must be >= 1");

    std::vector<ReplicateCounts> rows(config.replicates);
    run_parallel(config.replicates, config.threads, [&](std::size_t r) {
        rows[r] = replicate_counts(config, mix_seed(config.seed, config.replicate_offset + r));
    });

    MonteCarloReport report;
    report.config_ = config;
    report.x_.init(config.kmax + 1);
    report.deg_.init(config.dmax + 1);
    report.nmarg_.init(config.kmax + 1);
    report.pmarg_.init(config.kmax + 1);
    for (const auto& row : rows) {
        report.x_.fold(row.x);
        report.deg_.fold(row.deg);
        report.nmarg_.fold(row.nmarg);
        report.pmarg_.fold(row.pmarg);
    }
    if (config.keep_replicates) {
        report.replicate_x_.reserve(rows.size());
        for (auto& row : rows) report.replicate_x_.push_back(std::move(row.x));
    }
    return report;
}

std::string MonteCarloReport::to_json(const std::string& golden_ref) const {
    json rows = json::array();
    const auto push = [&](const char* stat, std::uint32_t index, const SummaryStats& s,
                          const double* dp, const double* closed) {
        json row{{"stat", stat},     {"index", index}, {"mean", s.mean},
                 {"stddev", s.stddev}, {"se", s.se},   {"min", s.min},
                 {"max", s.max}};
        if (dp) row["dp"] = *dp;
        if (closed) row["closed"] = *closed;
        rows.push_back(std::move(row));
    };
    for (std::uint32_t k = 0; k <= config_.kmax; ++k)
        push("X", k, x_stats(k), dp_x_.empty() ? nullptr : &dp_x_[k], nullptr);
    for (std::uint32_t d = 1; d <= config_.dmax; ++d)
        push("deg", d, deg_stats(d), dp_m1_.empty() ? nullptr : &dp_m1_[d],
             closed_m1_.empty() ? nullptr : &closed_m1_[d]);
    for (std::uint32_t k = 0; k <= config_.kmax; ++k)
        push("Nmarg", k, nmarg_stats(k), nullptr, nullptr);
    for (std::uint32_t k = 0; k <= config_.kmax; ++k)
        push("Pmarg", k, pmarg_stats(k), nullptr, nullptr);
    json out{{"version", "pa-secdeg v1"},
             {"kind", "mc"},
             {"config", config_json(config_)},
             {"rows", std::move(rows)},
             {"golden_ref", golden_ref.empty() ? json() : json(golden_ref)}};
    return out.dump(2) + "\n";
}

std::string MonteCarloReport::to_csv() const {
    std::string out = "# pa-secdeg v1\nstat,index,mean,stddev,se,min,max,dp,closed\n";
    char buf[320];
    const auto emit = [&](const char* stat, std::uint32_t index, const SummaryStats& s,
                          const double* dp, const double* closed) {
        std::snprintf(buf, sizeof buf, "%s,%u,%.17g,%.17g,%.17g,%llu,%llu", stat, index,
                      s.mean, s.stddev, s.se,
                      static_cast<unsigned long long>(s.min),
                      static_cast<unsigned long long>(s.max));
        out += buf;
        if (dp) {
            std::snprintf(buf, sizeof buf, ",%.17g", *dp);
            out += buf;
        } else {
            out += ',';
        }
        if (closed) {
            std::snprintf(buf, sizeof buf, ",%.17g", *closed);
            out += buf;
        } else {
            out += ',';
        }
        out += '\n';
    };
    for (std::uint32_t k = 0; k <= config_.kmax; ++k)
        emit("X", k, x_stats(k), dp_x_.empty() ? nullptr : &dp_x_[k], nullptr);
    for (std::uint32_t d = 1; d <= config_.dmax; ++d)
        emit("deg", d, deg_stats(d), dp_m1_.empty() ? nullptr : &dp_m1_[d],
             closed_m1_.empty() ? nullptr : &closed_m1_[d]);
    for (std::uint32_t k = 0; k <= config_.kmax; ++k)
        emit("Nmarg", k, nmarg_stats(k), nullptr, nullptr);
    for (std::uint32_t k = 0; k <= config_.kmax; ++k)
        emit("Pmarg", k, pmarg_stats(k), nullptr, nullptr);
    return out;
}

Theorem2Report theorem2_report(std::size_t n, std::uint32_t kmax, const std::string& source,
                               const Theorem2Options& options) {
    if (source != "dp" && source != "mc")
        throw std::invalid_argument("theorem2_report: source must be dp or mc");
    Theorem2Report report;
    report.n = n;
    report.source = source;
    report.options = options;

    std::vector<double> m2(kmax + 1, 0.0);
    if (source == "dp") {
        // the window is closed from below, so widening kmax to the square
        // lmax x lmax window changes nothing for k <= kmax
        const std::uint32_t kwin = std::max(options.lmax, kmax);
        const auto dp = dp_expectations(n, options.lmax, kwin, kwin, OracleMode::float64);
        for (std::uint32_t k = 0; k <= kmax; ++k) m2[k] = dp.second_degree_expectation(k);
    } else {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.replicates = options.replicates;
        cfg.kmax = kmax;
        cfg.dmax = 1;
        cfg.seed = options.seed;
        cfg.threads = options.threads;
        const auto mc = monte_carlo(cfg);
        for (std::uint32_t k = 0; k <= kmax; ++k) m2[k] = mc.x_stats(k).mean;
    }
    for (std::uint32_t k = std::max<std::uint32_t>(options.kmin, 2); k <= kmax; ++k) {
        Theorem2Row row;
        row.k = k;
        row.m2 = m2[k];
        row.ratio = static_cast<double>(k) * k * m2[k] / (4.0 * static_cast<double>(n));
        const double lk = std::log(static_cast<double>(k));
        row.envelope = options.envelope_constant *
                       (lk * lk / k + static_cast<double>(k) * k / static_cast<double>(n));
        row.within = std::abs(row.ratio - 1.0) <= row.envelope;
        report.rows.push_back(row);
    }
    return report;
}

std::string Theorem2Report::to_json(const std::string& golden_ref) const {
    json rows = json::array();
    for (const auto& r : this->rows)
        rows.push_back(json{{"k", r.k},
                            {"m2", r.m2},
                            {"ratio", r.ratio},
                            {"envelope", r.envelope},
                            {"within", r.within}});
    json out{{"version", "pa-secdeg v1"},
             {"kind", "theorem2"},
             {"config", {{"n", n}, {"source", source},
                         {"lmax", options.lmax},
                         {"envelope_constant", options.envelope_constant}}},
             {"rows", std::move(rows)},
             {"golden_ref", golden_ref.empty() ? json() : json(golden_ref)}};
    return out.dump(2) + "\n";
}

std::string Theorem2Report::to_csv() const {
    std::string out = "# pa-secdeg v1\nk,m2,ratio,envelope,within\n";
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g,%.17g,%d\n", r.k, r.m2, r.ratio,
                      r.envelope, r.within ? 1 : 0);
        out += buf;
    }
    return out;
}

Theorem1Report theorem1_report(std::size_t n, std::uint32_t m, std::uint32_t dmax,
                               std::uint32_t replicates, std::uint64_t seed,
                               std::uint32_t threads, double tolerance) {
    if (m < 1) throw std::invalid_argument("theorem1_report: m must be >= 1");
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.replicates = replicates;
    cfg.kmax = 1;
    cfg.dmax = dmax;
    cfg.seed = seed;
    cfg.threads = threads;
    const auto mc = monte_carlo(cfg);

    Theorem1Report report;
    report.n = n;
    report.m = m;
    report.replicates = replicates;
    report.tolerance = tolerance;
    for (std::uint32_t d = m; d <= dmax; ++d) {
        Theorem1Row row;
        row.d = d;
        const auto s = mc.deg_stats(d);
        row.mean = s.mean;
        row.se = s.se;
        row.expected = 2.0 * static_cast<double>(n) * m * (m + 1) /
                       (static_cast<double>(d) * (d + 1) * (d + 2));
        row.rel_error = std::abs(row.mean / row.expected - 1.0);
        row.within = row.rel_error <= tolerance;
        report.rows.push_back(row);
    }
    return report;
}

std::string Theorem1Report::to_json(const std::string& golden_ref) const {
    json rows = json::array();
    for (const auto& r : this->rows)
        rows.push_back(json{{"d", r.d},
                            {"mean", r.mean},
                            {"se", r.se},
                            {"expected", r.expected},
                            {"rel_error", r.rel_error},
                            {"within", r.within}});
    json out{{"version", "pa-secdeg v1"},
             {"kind", "theorem1"},
             {"config", {{"n", n}, {"m", m}, {"replicates", replicates},
                         {"tolerance", tolerance}}},
             {"rows", std::move(rows)},
             {"golden_ref", golden_ref.empty() ? json() : json(golden_ref)}};
    return out.dump(2) + "\n";
}

std::string Theorem1Report::to_csv() const {
    std::string out = "# pa-secdeg v1\nd,mean,se,expected,rel_error,within\n";
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g,%.17g,%.17g,%d\n", r.d, r.mean, r.se,
                      r.expected, r.rel_error, r.within ? 1 : 0);
        out += buf;
    }
    return out;
}

ConcentrationReport concentration_report(std::size_t n, std::uint32_t kmax,
                                         std::uint32_t replicates, std::uint64_t seed,
                                         std::uint32_t threads) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.replicates = replicates;
    cfg.kmax = kmax;
    cfg.dmax = 1;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.keep_replicates = true;
    const auto mc = monte_carlo(cfg);

    ConcentrationReport report;
    report.n = n;
    report.replicates = replicates;
    const double logn = std::log(static_cast<double>(n));
    const double threshold_base = std::sqrt(static_cast<double>(n)) * logn * logn;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        ConcentrationRow row;
        row.k = k;
        const auto s = mc.x_stats(k);
        row.mean = s.mean;
        row.stddev = s.stddev;
        row.cv = s.mean > 0 ? s.stddev / s.mean : 0.0;
        row.threshold = k * threshold_base;
        for (const auto& rep : mc.replicate_x()) {
            const double dev = std::abs(static_cast<double>(rep[k]) - row.mean);
            row.max_abs_dev = std::max(row.max_abs_dev, dev);
            if (dev >= row.threshold) ++row.exceed_count;
        }
        report.rows.push_back(row);
    }
    report.replicate_x = mc.replicate_x();
    return report;
}

std::string ConcentrationReport::to_json(const std::string& golden_ref) const {
    json rows = json::array();
    for (const auto& r : this->rows)
        rows.push_back(json{{"k", r.k},
                            {"mean", r.mean},
                            {"stddev", r.stddev},
                            {"cv", r.cv},
                            {"threshold", r.threshold},
                            {"max_abs_dev", r.max_abs_dev},
                            {"exceed_count", r.exceed_count}});
    json out{{"version", "pa-secdeg v1"},
             {"kind", "concentration"},
             {"config", {{"n", n}, {"replicates", replicates}}},
             {"rows", std::move(rows)},
             {"golden_ref", golden_ref.empty() ? json() : json(golden_ref)}};
    return out.dump(2) + "\n";
}

std::string ConcentrationReport::to_csv() const {
    std::string out = "# pa-secdeg v1\nk,mean,stddev,cv,threshold,max_abs_dev,exceed_count\n";
    char buf[224];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g,%.17g,%.17g,%.17g,%u\n", r.k, r.mean,
                      r.stddev, r.cv, r.threshold, r.max_abs_dev, r.exceed_count);
        out += buf;
    }
    return out;
}

double bootstrap_cv_se(const std::vector<std::vector<std::uint64_t>>& replicate_x,
                       std::uint32_t k, std::uint32_t resamples, std::uint64_t seed) {
    const std::size_t r = replicate_x.size();
    if (r < 2) throw std::invalid_argument("bootstrap_cv_se: needs >= 2 replicates");
    Xoshiro256PlusPlus rng(seed);
    std::vector<double> cvs;
    cvs.reserve(resamples);
    for (std::uint32_t b = 0; b < resamples; ++b) {
        double sum = 0, sumsq = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const double v = static_cast<double>(replicate_x[rng.bounded(r)][k]);
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / r;
        const double var = std::max(0.0, (sumsq - r * mean * mean) / (r - 1));
        cvs.push_back(mean > 0 ? std::sqrt(var) / mean : 0.0);
    }
    double mean = 0;
    for (const double v : cvs) mean += v;
    mean /= cvs.size();
    double var = 0;
    for (const double v : cvs) var += (v - mean) * (v - mean);
    return std::sqrt(var / (cvs.size() - 1));
}

BoundCheckReport bound_checks(const std::vector<std::size_t>& lemma1_grid,
                              const std::vector<std::size_t>& theorem4_grid,
                              const std::vector<std::size_t>& lemma2_grid) {
    BoundCheckReport report;

    for (const std::size_t n : lemma1_grid) {
        const std::uint32_t dmax = static_cast<std::uint32_t>(2 * n + 2);
        const auto dp = dp_expectations(n, 2, 0, dmax, OracleMode::float64,
                                        DpParts{.en = false, .ep = false});
        Lemma1Check check;
        check.n = n;
        for (std::uint32_t d = 1; d <= dmax; ++d) {
            const double theta =
                std::abs(dp.m1(d) * d * (d + 1) * (d + 2) / (4.0 * static_cast<double>(n)) -
                         1.0);
            const double margin = theta * static_cast<double>(n) / (static_cast<double>(d) * d);
            if (margin > check.worst_margin) {
                check.worst_margin = margin;
                check.worst_d = d;
            }
        }
        check.pass = check.worst_margin < 1.0;
        report.lemma1.push_back(check);
    }

    if (!theorem4_grid.empty()) {
        const std::uint32_t lcap = 20, kcap = 30;
        const auto c = c_table(lcap, kcap, Mode::float64);
        for (const std::size_t n : theorem4_grid) {
            const auto dp = dp_expectations(n, lcap, kcap, kcap, OracleMode::float64,
                                            DpParts{.en = true, .ep = false});
            Theorem4Check check;
            check.n = n;
            for (std::uint32_t l = 1; l <= lcap; ++l) {
                for (std::uint32_t k = 1; k <= kcap; ++k) {
                    if (c.value(l, k) <= 0) continue;
                    const double theta =
                        std::abs(dp.en(l, k) / (static_cast<double>(n) * c.value(l, k)) - 1.0);
                    const double margin = theta * static_cast<double>(n) /
                                          (static_cast<double>(2 * l + k - 1) * (2 * l + k - 1));
                    if (margin > check.worst_margin) {
                        check.worst_margin = margin;
                        check.worst_l = l;
                        check.worst_k = k;
                    }
                }
            }
            check.pass = check.worst_margin < 1.0;
            report.theorem4.push_back(check);
        }
    }

    for (const std::size_t n : lemma2_grid) {
        const std::uint32_t lmax = static_cast<std::uint32_t>(n / 2 + 2);
        const std::uint32_t kmax = static_cast<std::uint32_t>(n + 2);
        const auto dp = dp_expectations(n, lmax, kmax, 0, OracleMode::float64,
                                        DpParts{.en = false, .ep = true});
        const auto p = p_table(lmax, kmax, Mode::float64);
        Lemma2Check check;
        check.n = n;
        for (std::uint32_t l = 2; l <= lmax; ++l) {
            for (std::uint32_t k = 0; k <= kmax; ++k) {
                if (2ULL * l + k > n) continue;
                ++check.scope_cells;
                const double ep = dp.ep(l, k);
                const double pv = p.value(l, k);
                if (ep > pv) {
                    check.violations.push_back(Lemma2Violation{l, k, ep, pv});
                    if (pv > 0) check.worst_ratio = std::max(check.worst_ratio, ep / pv);
                }
            }
        }
        check.pass = check.violations.empty();
        report.lemma2.push_back(check);
    }

    // The documented small-n boundary case, from enumeration.
    const auto enum2 = enumerate_exact(2);
    report.small_n_exception_ep = enum2.ep(3, 0);
    report.small_n_exception_p = p_table(3, 0, Mode::float64).value(3, 0);
    return report;
}

std::string BoundCheckReport::to_json(const std::string& golden_ref) const {
    json l1 = json::array();
    for (const auto& c : lemma1)
        l1.push_back(json{{"n", c.n},
                          {"worst_margin", c.worst_margin},
                          {"worst_d", c.worst_d},
                          {"pass", c.pass}});
    json t4 = json::array();
    for (const auto& c : theorem4)
        t4.push_back(json{{"n", c.n},
                          {"worst_margin", c.worst_margin},
                          {"worst_l", c.worst_l},
                          {"worst_k", c.worst_k},
                          {"pass", c.pass}});
    json l2 = json::array();
    for (const auto& c : lemma2) {
        json viol = json::array();
        for (const auto& v : c.violations)
            viol.push_back(json{{"l", v.l}, {"k", v.k}, {"ep", v.ep}, {"p", v.p}});
        l2.push_back(json{{"n", c.n},
                          {"scope_cells", c.scope_cells},
                          {"violations", std::move(viol)},
                          {"worst_ratio", c.worst_ratio},
                          {"pass", c.pass}});
    }
    json out{{"version", "pa-secdeg v1"},
             {"kind", "bounds"},
             {"lemma1", std::move(l1)},
             {"theorem4", std::move(t4)},
             {"lemma2", std::move(l2)},
             {"small_n_exception",
              {{"ep_2_3_0", small_n_exception_ep}, {"p_3_0", small_n_exception_p}}},
             {"golden_ref", golden_ref.empty() ? json() : json(golden_ref)}};
    return out.dump(2) + "\n";
}

std::string BoundCheckReport::to_csv() const {
    std::string out = "# pa-secdeg v1\ncheck,n,worst_margin_or_ratio,worst_l,worst_k,pass\n";
    char buf[192];
    for (const auto& c : lemma1) {
        std::snprintf(buf, sizeof buf, "lemma1,%zu,%.17g,0,%u,%d\n", c.n, c.worst_margin,
                      c.worst_d, c.pass ? 1 : 0);
        out += buf;
    }
    for (const auto& c : theorem4) {
        std::snprintf(buf, sizeof buf, "theorem4,%zu,%.17g,%u,%u,%d\n", c.n, c.worst_margin,
                      c.worst_l, c.worst_k, c.pass ? 1 : 0);
        out += buf;
    }
    for (const auto& c : lemma2) {
        const auto* worst = c.violations.empty() ? nullptr : &c.violations.front();
        std::snprintf(buf, sizeof buf, "lemma2,%zu,%.17g,%u,%u,%d\n", c.n, c.worst_ratio,
                      worst ? worst->l : 0, worst ? worst->k : 0, c.pass ? 1 : 0);
        out += buf;
    }
    return out;
}

} // namespace pasecdeg
