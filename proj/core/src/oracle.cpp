#include "pasecdeg/oracle.hpp"

#include "pasecdeg/multigraph.hpp"
#include "pasecdeg/statistics.hpp"
#include "value_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pasecdeg {

using detail::StepCoef;
using detail::value_is_zero;

namespace {

template <typename V>
struct DpTables {
    std::vector<V> en, ep, m1;
};

template <typename V>
void dp_run(std::size_t n, std::uint32_t lmax, std::uint32_t kmax, std::uint32_t dmax,
            DpParts parts, DpTables<V>& t) {
    const std::size_t w = kmax + 1;
    const auto en = [&](std::uint32_t l, std::uint32_t k) -> V& { return t.en[l * w + k]; };
    const auto ep = [&](std::uint32_t l, std::uint32_t k) -> V& { return t.ep[l * w + k]; };

    t.en.assign(parts.en ? (lmax + 1) * w : 0, V(0));
    t.ep.assign(parts.ep ? (lmax + 1) * w : 0, V(0));
    t.m1.assign(dmax + 1, V(0));
    if (parts.ep && lmax >= 2) ep(2, 0) = V(1);
    if (dmax >= 2) t.m1[2] = V(1);

    for (std::size_t i = 1; i < n; ++i) {
        const unsigned long long den = 2 * i + 1;
        const StepCoef<V> coef(den);
        // Updates read only old values: dependencies point to smaller l, k, d,
        // so descending sweeps can run in place. EN reads this step's M1, so
        // M1 updates last.
        if (parts.en) {
            for (std::uint32_t l = lmax; l >= 1; --l) {
                for (std::uint32_t k = kmax + 1; k-- > 0;) {
                    const long long spoil = 2LL * l + k;
                    V& cell = en(l, k);
                    if (static_cast<unsigned long long>(spoil) > den && !value_is_zero(cell))
                        throw std::logic_error("dp: nonzero EN cell with negative coefficient");
                    V v = cell * coef(static_cast<long long>(den) - spoil);
                    if (l >= 2) v += en(l - 1, k) * coef(l - 1);
                    if (k >= 1) v += en(l, k - 1) * coef(l + k - 1);
                    if (l == 1 && k >= 1 && k <= dmax) v += t.m1[k] * coef(k);
                    cell = v;
                }
            }
        }
        if (parts.ep) {
            for (std::uint32_t l = lmax; l >= 2; --l) {
                for (std::uint32_t k = kmax + 1; k-- > 0;) {
                    const long long spoil = 2LL * l + k - 2;
                    V& cell = ep(l, k);
                    if (static_cast<unsigned long long>(spoil) > den && !value_is_zero(cell))
                        throw std::logic_error("dp: nonzero EP cell with negative coefficient");
                    V v = cell * coef(static_cast<long long>(den) - spoil);
                    if (l >= 3) v += ep(l - 1, k) * coef(l - 1);
                    if (k >= 1) v += ep(l, k - 1) * coef(l + k - 3);
                    if (l == 2 && k == 0) v += coef(1);
                    cell = v;
                }
            }
        }
        for (std::uint32_t d = dmax; d >= 1; --d) {
            V& cell = t.m1[d];
            if (d > den && !value_is_zero(cell))
                throw std::logic_error("dp: nonzero M1 entry with negative coefficient");
            V v = cell * coef(static_cast<long long>(den) - d);
            if (d >= 2) v += t.m1[d - 1] * coef(d - 1);
            if (d == 1) v += coef(2 * static_cast<long long>(i));
            if (d == 2) v += coef(1);
            cell = v;
        }
    }
}

} // namespace

std::size_t ExpectationTable::lk(std::uint32_t l, std::uint32_t k) const {
    if (l > lmax_ || k > kmax_)
        throw std::out_of_range("ExpectationTable: cell outside window");
    return static_cast<std::size_t>(l) * (kmax_ + 1) + k;
}

double ExpectationTable::en(std::uint32_t l, std::uint32_t k) const {
    const std::size_t i = lk(l, k);
    if (fen_.empty()) throw std::logic_error("ExpectationTable: EN was not computed");
    return fen_[i];
}

double ExpectationTable::ep(std::uint32_t l, std::uint32_t k) const {
    const std::size_t i = lk(l, k);
    if (fep_.empty()) throw std::logic_error("ExpectationTable: EP was not computed");
    return fep_[i];
}

bool ExpectationTable::full_window() const {
    return lmax_ >= n_ + 1 && kmax_ >= 2 * n_ && dmax_ >= n_ + 1;
}

const Rational& ExpectationTable::en_exact(std::uint32_t l, std::uint32_t k) const {
    if (mode_ != OracleMode::exact)
        throw std::logic_error("ExpectationTable: exact access on float64 table");
    return ren_[lk(l, k)];
}

const Rational& ExpectationTable::ep_exact(std::uint32_t l, std::uint32_t k) const {
    if (mode_ != OracleMode::exact)
        throw std::logic_error("ExpectationTable: exact access on float64 table");
    return rep_[lk(l, k)];
}

const Rational& ExpectationTable::m1_exact(std::uint32_t d) const {
    if (mode_ != OracleMode::exact)
        throw std::logic_error("ExpectationTable: exact access on float64 table");
    return rm1_.at(d);
}

double ExpectationTable::en_mass() const {
    double s = 0;
    for (const double v : fen_) s += v;
    return s;
}

double ExpectationTable::ep_mass() const {
    double s = 0;
    for (const double v : fep_) s += v;
    return s;
}

double ExpectationTable::m1_mass() const {
    double s = 0;
    for (const double v : fm1_) s += v;
    return s;
}

double ExpectationTable::second_degree_expectation(std::uint32_t k) const {
    double s = 0;
    for (std::uint32_t l = 1; l <= lmax_; ++l) {
        if (!fen_.empty()) s += en(l, k);
        if (!fep_.empty()) s += ep(l, k);
    }
    return s;
}

ExpectationTable dp_expectations(std::size_t n, std::uint32_t lmax, std::uint32_t kmax,
                                 std::uint32_t dmax, OracleMode mode, DpParts parts) {
    if (n < 1) throw std::invalid_argument("dp_expectations: n must be >= 1");
    if (lmax < 2) throw std::invalid_argument("dp_expectations: lmax must be >= 2");
    if (parts.en && dmax < kmax)
        throw std::invalid_argument(
            "dp_expectations: window too small, EN needs dmax >= kmax (M1 feeds the "
            "degree-1 birth term); got dmax=" + std::to_string(dmax) +
            " kmax=" + std::to_string(kmax));
    if (mode == OracleMode::exact && n > kExactDpMaxN)
        throw std::invalid_argument("dp_expectations: exact mode capped at n=" +
                                    std::to_string(kExactDpMaxN) + ", use float64");

    ExpectationTable result;
    result.n_ = n;
    result.lmax_ = lmax;
    result.kmax_ = kmax;
    result.dmax_ = dmax;
    result.mode_ = mode;
    result.provenance_ = Provenance::dp;

    if (mode == OracleMode::exact) {
        DpTables<Rational> t;
        dp_run<Rational>(n, lmax, kmax, dmax, parts, t);
        result.ren_ = std::move(t.en);
        result.rep_ = std::move(t.ep);
        result.rm1_ = std::move(t.m1);
        result.fen_.resize(result.ren_.size());
        result.fep_.resize(result.rep_.size());
        result.fm1_.resize(result.rm1_.size());
        for (std::size_t i = 0; i < result.ren_.size(); ++i)
            result.fen_[i] = result.ren_[i].to_double();
        for (std::size_t i = 0; i < result.rep_.size(); ++i)
            result.fep_[i] = result.rep_[i].to_double();
        for (std::size_t i = 0; i < result.rm1_.size(); ++i)
            result.fm1_[i] = result.rm1_[i].to_double();
    } else {
        DpTables<double> t;
        dp_run<double>(n, lmax, kmax, dmax, parts, t);
        result.fen_ = std::move(t.en);
        result.fep_ = std::move(t.ep);
        result.fm1_ = std::move(t.m1);
    }
    return result;
}

std::uint64_t double_factorial_histories(std::size_t n) {
    if (n > 16)
        throw std::invalid_argument("double_factorial_histories: (2n-1)!! exceeds 64 bits");
    std::uint64_t h = 1;
    for (std::size_t t = 1; t <= n; ++t) h *= 2 * t - 1;
    return h;
}

ExpectationTable enumerate_exact(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw std::invalid_argument("enumerate_exact: n=" + std::to_string(n) +
                                    " above the enumeration cap " + std::to_string(cap));
    const std::uint64_t histories = double_factorial_histories(n);

    const std::uint32_t lmax = static_cast<std::uint32_t>(std::max<std::size_t>(n + 1, 2));
    const std::uint32_t kmax = static_cast<std::uint32_t>(std::max<std::size_t>(2 * n, 1));
    const std::uint32_t dmax = lmax;
    const std::size_t w = kmax + 1;

    std::vector<std::uint64_t> cntN((lmax + 1) * w, 0), cntP((lmax + 1) * w, 0);
    std::vector<std::uint64_t> cntM1(dmax + 1, 0);

    std::vector<Vertex> slots;
    slots.reserve(2 * n);
    AttachmentHistory history;
    history.targets.reserve(n);

    // Depth-first over the mixed-radix slot counter: digit t has 2t-1 values.
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t > n) {
            const MultiGraph g = MultiGraph::from_history(history);
            const JointCounts counts = joint_counts(g);
            for (const auto& [cell, cnt] : counts.N)
                cntN[cell.first * w + cell.second] += cnt;
            for (const auto& [cell, cnt] : counts.P)
                cntP[cell.first * w + cell.second] += cnt;
            for (const auto& [d, cnt] : counts.degree_hist) cntM1[d] += cnt;
            return;
        }
        for (std::uint64_t j = 0; j < 2 * t - 1; ++j) {
            const Vertex target = (j == 2 * t - 2) ? static_cast<Vertex>(t)
                                                   : slots[j];
            history.targets.push_back(target);
            slots.push_back(target);
            slots.push_back(static_cast<Vertex>(t));
            self(self, t + 1);
            slots.pop_back();
            slots.pop_back();
            history.targets.pop_back();
        }
    };
    rec(rec, 1);

    ExpectationTable result;
    result.n_ = n;
    result.lmax_ = lmax;
    result.kmax_ = kmax;
    result.dmax_ = dmax;
    result.mode_ = OracleMode::exact;
    result.provenance_ = Provenance::enumeration;
    result.ren_.resize(cntN.size());
    result.rep_.resize(cntP.size());
    result.rm1_.resize(cntM1.size());
    result.fen_.resize(cntN.size());
    result.fep_.resize(cntP.size());
    result.fm1_.resize(cntM1.size());
    for (std::size_t i = 0; i < cntN.size(); ++i) {
        result.ren_[i] = Rational(static_cast<long long>(cntN[i]), histories);
        result.fen_[i] = result.ren_[i].to_double();
        result.rep_[i] = Rational(static_cast<long long>(cntP[i]), histories);
        result.fep_[i] = result.rep_[i].to_double();
    }
    for (std::size_t i = 0; i < cntM1.size(); ++i) {
        result.rm1_[i] = Rational(static_cast<long long>(cntM1[i]), histories);
        result.fm1_[i] = result.rm1_[i].to_double();
    }
    return result;
}

DiffReport diff_tables(const ExpectationTable& dp_table, const ExpectationTable& enum_table) {
    DiffReport report;
    report.n = dp_table.n();
    report.mode = dp_table.mode();
    const bool exact =
        dp_table.mode() == OracleMode::exact && enum_table.mode() == OracleMode::exact;
    report.exact_identical = exact;

    const std::size_t n = dp_table.n();
    const std::uint32_t lr = static_cast<std::uint32_t>(n + 1); // reachable degree bound
    const std::uint32_t kr = static_cast<std::uint32_t>(2 * n); // reachable d2 bound

    const auto consider = [&](char kind, std::uint32_t l, std::uint32_t k, double a,
                              double b, bool same) {
        const double d = std::abs(a - b);
        if (!same) report.exact_identical = false;
        if (d > report.max_abs_diff) {
            report.max_abs_diff = d;
            report.worst = DiffCell{kind, l, k, a, b};
        }
    };

    for (std::uint32_t l = 1; l <= lr; ++l) {
        for (std::uint32_t k = 0; k <= kr; ++k) {
            const bool in_dp = l <= dp_table.lmax() && k <= dp_table.kmax();
            const bool in_enum = l <= enum_table.lmax() && k <= enum_table.kmax();
            if (!in_dp || !in_enum) {
                const bool other_nonzero =
                    (in_dp && (dp_table.en(l, k) != 0 || dp_table.ep(l, k) != 0)) ||
                    (in_enum && (enum_table.en(l, k) != 0 || enum_table.ep(l, k) != 0));
                if (other_nonzero || (!in_dp && !in_enum))
                    report.uncovered.push_back("(l=" + std::to_string(l) + ",k=" +
                                               std::to_string(k) + ") outside " +
                                               (in_dp ? "enum" : "dp") + " window");
                continue;
            }
            if (exact) {
                consider('N', l, k, dp_table.en(l, k), enum_table.en(l, k),
                         dp_table.en_exact(l, k) == enum_table.en_exact(l, k));
                consider('P', l, k, dp_table.ep(l, k), enum_table.ep(l, k),
                         dp_table.ep_exact(l, k) == enum_table.ep_exact(l, k));
            } else {
                consider('N', l, k, dp_table.en(l, k), enum_table.en(l, k), true);
                consider('P', l, k, dp_table.ep(l, k), enum_table.ep(l, k), true);
            }
        }
    }
    for (std::uint32_t d = 1; d <= lr; ++d) {
        const bool in_dp = d <= dp_table.dmax();
        const bool in_enum = d <= enum_table.dmax();
        if (!in_dp || !in_enum) {
            report.uncovered.push_back("(d=" + std::to_string(d) + ") outside " +
                                       (in_dp ? "enum" : "dp") + " M1 window");
            continue;
        }
        if (exact)
            consider('M', 0, d, dp_table.m1(d), enum_table.m1(d),
                     dp_table.m1_exact(d) == enum_table.m1_exact(d));
        else
            consider('M', 0, d, dp_table.m1(d), enum_table.m1(d), true);
    }
    if (!exact) report.exact_identical = false;
    return report;
}

DiffReport dp_vs_enum(std::size_t n, OracleMode mode, std::size_t cap) {
    const auto enum_table = enumerate_exact(n, cap);
    const auto lmax = enum_table.lmax();
    const auto kmax = enum_table.kmax();
    const auto dmax = std::max(enum_table.dmax(), kmax); // dp needs dmax >= kmax
    const auto dp_table = dp_expectations(n, lmax, kmax, dmax, mode);
    return diff_tables(dp_table, enum_table);
}

} // namespace pasecdeg
