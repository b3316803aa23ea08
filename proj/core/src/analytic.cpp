#include "pasecdeg/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pasecdeg {

namespace {

struct KahanSum {
    double sum = 0, carry = 0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Shared builder for both arithmetic modes. V is double or Rational; both
// support V(long long), V(long long, unsigned long long) and field ops.
template <typename V>
V ratio(long long num, unsigned long long den) {
    return V(num, den);
}

template <>
double ratio<double>(long long num, unsigned long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

template <typename V>
void build_c(std::vector<V>& cells, std::uint32_t lmax, std::uint32_t kmax) {
    const auto at = [&](std::uint32_t l, std::uint32_t k) -> V& {
        return cells[static_cast<std::size_t>(l) * (kmax + 1) + k];
    };
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        const unsigned long long kk = k;
        at(1, k) = ratio<V>(static_cast<long long>(2 * kk * kk + 14 * kk),
                            (kk + 1) * (kk + 2)) /
                   ratio<V>(static_cast<long long>((kk + 3) * (kk + 4)), 1);
    }
    for (std::uint32_t l = 2; l <= lmax; ++l) {
        for (std::uint32_t k = 1; k <= kmax; ++k) {
            at(l, k) = (at(l, k - 1) * ratio<V>(l + k - 1, 1) +
                        at(l - 1, k) * ratio<V>(l - 1, 1)) /
                       ratio<V>(2ULL * l + k + 2, 1);
        }
    }
}

template <typename V>
void build_p(std::vector<V>& cells, std::uint32_t lmax, std::uint32_t kmax) {
    const auto at = [&](std::uint32_t l, std::uint32_t k) -> V& {
        return cells[static_cast<std::size_t>(l) * (kmax + 1) + k];
    };
    if (lmax >= 2) at(2, 0) = ratio<V>(1, 1);
    for (std::uint32_t l = 3; l <= lmax; ++l) {
        for (std::uint32_t k = 0; k <= kmax; ++k) {
            V v = at(l - 1, k) * ratio<V>(l - 1, 1);
            if (k >= 1) v = v + at(l, k - 1) * ratio<V>(l + k - 3, 1);
            at(l, k) = v / ratio<V>(2ULL * l + k - 2, 1);
        }
    }
}

template <typename V>
void build_c_row_tails(const std::vector<V>& cells, std::vector<V>& tails,
                       std::uint32_t lmax, std::uint32_t kmax) {
    const auto at = [&](std::uint32_t l, std::uint32_t k) -> const V& {
        return cells[static_cast<std::size_t>(l) * (kmax + 1) + k];
    };
    const unsigned long long K = kmax;
    tails[1] = ratio<V>(-2, K + 2) + ratio<V>(8, K + 3) + ratio<V>(-4, K + 4);
    for (std::uint32_t l = 2; l <= lmax; ++l)
        tails[l] = (at(l, kmax) * ratio<V>(l + K, 1) + tails[l - 1] * ratio<V>(l - 1, 1)) /
                   ratio<V>(l + 2, 1);
}

} // namespace

std::size_t AnalyticTable::index(std::uint32_t l, std::uint32_t k) const {
    if (l > lmax_ || k > kmax_)
        throw std::out_of_range("AnalyticTable: cell (" + std::to_string(l) + "," +
                                std::to_string(k) + ") outside " + std::to_string(lmax_) +
                                "x" + std::to_string(kmax_));
    return static_cast<std::size_t>(l) * (kmax_ + 1) + k;
}

const Rational& AnalyticTable::exact(std::uint32_t l, std::uint32_t k) const {
    if (mode_ != Mode::exact)
        throw std::logic_error("AnalyticTable: exact() on a float64 table");
    return rcells_[index(l, k)];
}

double AnalyticTable::row_tail(std::uint32_t l) const {
    if (kind_ != TableKind::c) throw std::logic_error("row_tail: c-tables only");
    if (l < 1 || l > lmax_) throw std::out_of_range("row_tail: bad row");
    return frow_tail_[l];
}

const Rational& AnalyticTable::row_tail_exact(std::uint32_t l) const {
    if (kind_ != TableKind::c || mode_ != Mode::exact)
        throw std::logic_error("row_tail_exact: exact c-tables only");
    if (l < 1 || l > lmax_) throw std::out_of_range("row_tail_exact: bad row");
    return rrow_tail_[l];
}

double AnalyticTable::off_table_mass() const {
    if (kind_ != TableKind::c) throw std::logic_error("off_table_mass: c-tables only");
    KahanSum s;
    for (std::uint32_t l = 1; l <= lmax_; ++l) s.add(frow_tail_[l]);
    s.add(2.0 / (static_cast<double>(lmax_ + 1) * (lmax_ + 2)));
    return s.sum;
}

Rational AnalyticTable::off_table_mass_exact() const {
    if (kind_ != TableKind::c || mode_ != Mode::exact)
        throw std::logic_error("off_table_mass_exact: exact c-tables only");
    Rational s;
    for (std::uint32_t l = 1; l <= lmax_; ++l) s += rrow_tail_[l];
    s += Rational(2, static_cast<unsigned long long>(lmax_ + 1) * (lmax_ + 2));
    return s;
}

double AnalyticTable::row_sum_closed(std::uint32_t l) {
    return 4.0 / (static_cast<double>(l) * (l + 1) * (l + 2));
}

Rational AnalyticTable::row_sum_closed_exact(std::uint32_t l) {
    return Rational(4, static_cast<unsigned long long>(l) * (l + 1) * (l + 2));
}

AnalyticTable c_table(std::uint32_t lmax, std::uint32_t kmax, Mode mode) {
    if (lmax < 1) throw std::invalid_argument("c_table: lmax must be >= 1");
    if (lmax > 100000 || kmax > 100000)
        throw std::invalid_argument("c_table: window too large");
    AnalyticTable t;
    t.kind_ = TableKind::c;
    t.mode_ = mode;
    t.lmax_ = lmax;
    t.kmax_ = kmax;
    const std::size_t cells = static_cast<std::size_t>(lmax + 1) * (kmax + 1);
    if (mode == Mode::exact) {
        t.rcells_.assign(cells, Rational(0));
        build_c(t.rcells_, lmax, kmax);
        t.rrow_tail_.assign(lmax + 1, Rational(0));
        build_c_row_tails(t.rcells_, t.rrow_tail_, lmax, kmax);
        t.fcells_.resize(cells);
        for (std::size_t i = 0; i < cells; ++i) t.fcells_[i] = t.rcells_[i].to_double();
        t.frow_tail_.resize(lmax + 1);
        for (std::uint32_t l = 0; l <= lmax; ++l)
            t.frow_tail_[l] = t.rrow_tail_[l].to_double();
    } else {
        t.fcells_.assign(cells, 0.0);
        build_c(t.fcells_, lmax, kmax);
        t.frow_tail_.assign(lmax + 1, 0.0);
        build_c_row_tails(t.fcells_, t.frow_tail_, lmax, kmax);
    }
    return t;
}

AnalyticTable p_table(std::uint32_t lmax, std::uint32_t kmax, Mode mode) {
    if (lmax < 2) throw std::invalid_argument("p_table: lmax must be >= 2");
    if (lmax > 100000 || kmax > 100000)
        throw std::invalid_argument("p_table: window too large");
    AnalyticTable t;
    t.kind_ = TableKind::p;
    t.mode_ = mode;
    t.lmax_ = lmax;
    t.kmax_ = kmax;
    const std::size_t cells = static_cast<std::size_t>(lmax + 1) * (kmax + 1);
    if (mode == Mode::exact) {
        t.rcells_.assign(cells, Rational(0));
        build_p(t.rcells_, lmax, kmax);
        t.fcells_.resize(cells);
        for (std::size_t i = 0; i < cells; ++i) t.fcells_[i] = t.rcells_[i].to_double();
    } else {
        t.fcells_.assign(cells, 0.0);
        build_p(t.fcells_, lmax, kmax);
    }
    return t;
}

double m1_closed(double n, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("m1_closed: d must be >= 1");
    return 4.0 * n / (static_cast<double>(d) * (d + 1) * (d + 2));
}

double m2_leading(double n, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("m2_leading: k must be >= 1");
    return 4.0 * n / (static_cast<double>(k) * k);
}

std::vector<Rational> constructive_C(const AnalyticTable& c_exact, std::uint32_t upto) {
    if (c_exact.kind() != TableKind::c || c_exact.mode() != Mode::exact)
        throw std::invalid_argument("constructive_C: needs an exact c-table");
    if (upto > c_exact.lmax() || upto > c_exact.kmax())
        throw std::invalid_argument("constructive_C: table smaller than requested k");
    std::vector<Rational> C(upto + 1, Rational(0));
    Rational pow2(2);         // 2^k
    Rational factorial(1);    // (k-1)!
    for (std::uint32_t k = 1; k <= upto; ++k) {
        if (k >= 2) {
            pow2 *= Rational(2);
            factorial *= Rational(k - 1);
        }
        const Rational candidate = c_exact.exact(k, k) * pow2 / factorial;
        C[k] = (candidate > C[k - 1]) ? candidate : C[k - 1];
    }
    return C;
}

bool c_bound_holds(const AnalyticTable& c_exact, const std::vector<Rational>& C,
                   std::uint32_t l, std::uint32_t k) {
    if (k < 1 || l < k) throw std::invalid_argument("c_bound_holds: needs l >= k >= 1");
    if (k >= C.size()) throw std::invalid_argument("c_bound_holds: C(k) not available");
    // bound = C(k) 2^{-l} (l-1)!/(l-k)! = C(k) 2^{-l} * prod_{j=l-k+1}^{l-1} j
    Rational bound = C[k];
    for (std::uint32_t j = 0; j < l; ++j) bound /= Rational(2);
    for (std::uint32_t j = l - k + 1; j <= l - 1; ++j) bound *= Rational(j);
    return c_exact.exact(l, k) <= bound;
}

ColumnMoments column_moments(const AnalyticTable& c, std::uint32_t k, double tol) {
    if (c.kind() != TableKind::c) throw std::invalid_argument("column_moments: c-tables only");
    if (k > c.kmax()) throw std::out_of_range("column_moments: k outside table");
    ColumnMoments m;
    m.k = k;
    KahanSum x, y, z;
    const bool exact = c.mode() == Mode::exact;
    for (std::uint32_t l = 2; l <= c.lmax(); ++l) {
        const double v = c.value(l, k);
        x.add(v);
        y.add(static_cast<double>(l) * v);
        z.add(static_cast<double>(l) * (l + 1) * v);
        if (exact) {
            const Rational& r = c.exact(l, k);
            m.x_exact += r;
            m.y_exact += r * Rational(l);
            m.z_exact += r * Rational(static_cast<long long>(l) * (l + 1));
        }
    }
    m.x = x.sum;
    m.y = y.sum;
    m.z = z.sum;

    // Tail bounds from c(l,k) <= C(k) 2^{-l} (l-1)!/(l-k)!, valid for l >= k.
    // For l > lmax > 2k+1 the bound terms are dominated by a geometric
    // series with ratio rho <= (L+3)/(2(L+2-k)) < 1, L = lmax.
    const std::uint32_t L = c.lmax();
    if (k >= 1 && L > 2 * k + 1 && k <= L && k <= c.kmax()) {
        const double ckk = c.value(k, k);
        if (ckk > 0) {
            // log C(k) via the running max of log(c(j,j) 2^j / (j-1)!)
            double logC = -std::numeric_limits<double>::infinity();
            for (std::uint32_t j = 1; j <= k; ++j) {
                const double cjj = c.value(j, j);
                if (cjj > 0)
                    logC = std::max(logC, std::log(cjj) + j * std::log(2.0) - std::lgamma(j));
            }
            const double l1 = L + 1;
            const double logb = logC - l1 * std::log(2.0) + std::lgamma(l1) -
                                std::lgamma(l1 - k + 1);
            const double rho1 = (l1 + 0.0) / (2.0 * (l1 + 1 - k));       // weight 1
            const double rhoy = (l1 + 1.0) / (2.0 * (l1 + 1 - k));       // weight l
            const double rhoz = (l1 + 2.0) / (2.0 * (l1 + 1 - k));       // weight l(l+1)
            if (rhoz < 1.0) {
                m.x_tail_bound = std::exp(logb) / (1 - rho1);
                m.y_tail_bound = std::exp(logb + std::log(l1)) / (1 - rhoy);
                m.z_tail_bound = std::exp(logb + std::log(l1) + std::log(l1 + 1)) / (1 - rhoz);
                m.tail_bound_valid = true;
            }
        }
    }
    if (tol > 0 && (!m.tail_bound_valid || m.z_tail_bound > tol))
        throw std::runtime_error("column_moments: tail tolerance " + std::to_string(tol) +
                                 " unreachable at lmax=" + std::to_string(L) +
                                 " for k=" + std::to_string(k));
    return m;
}

double IdentityReport::worst_row_residual() const {
    double w = 0;
    for (const auto& [l, r] : row_residuals) w = std::max(w, r);
    return w;
}

double IdentityReport::worst_z_residual() const {
    double w = 0;
    for (const auto& [k, r] : z_residuals) w = std::max(w, r);
    return w;
}

IdentityReport identity_checks(const AnalyticTable& c, const AnalyticTable& p) {
    if (c.kind() != TableKind::c || p.kind() != TableKind::p)
        throw std::invalid_argument("identity_checks: pass (c-table, p-table)");
    IdentityReport report;
    const bool exact = c.mode() == Mode::exact;

    // Row sums and total, with the exact tail corrections.
    if (exact) {
        Rational total;
        for (std::uint32_t l = 1; l <= c.lmax(); ++l) {
            Rational row;
            for (std::uint32_t k = 0; k <= c.kmax(); ++k) row += c.exact(l, k);
            row += c.row_tail_exact(l);
            total += row;
            if (l <= 20)
                report.row_residuals.emplace_back(
                    l, (row - AnalyticTable::row_sum_closed_exact(l)).abs().to_double());
        }
        total += Rational(2, static_cast<unsigned long long>(c.lmax() + 1) * (c.lmax() + 2));
        report.total_residual = (total - Rational(1)).abs().to_double();
    } else {
        KahanSum total;
        for (std::uint32_t l = 1; l <= c.lmax(); ++l) {
            KahanSum row;
            for (std::uint32_t k = 0; k <= c.kmax(); ++k) row.add(c.value(l, k));
            row.add(c.row_tail(l));
            total.add(row.sum);
            if (l <= 20)
                report.row_residuals.emplace_back(
                    l, std::abs(row.sum - AnalyticTable::row_sum_closed(l)));
        }
        total.add(2.0 / (static_cast<double>(c.lmax() + 1) * (c.lmax() + 2)));
        report.total_residual = std::abs(total.sum - 1.0);
    }

    // Column identity sum_{l>=2} (l+k) l (l+1) c(l,k) = 6 sum_{s<=k} c(1,s).
    // Exact for the infinite sums; the reported residual is the truncated
    // l > lmax tail plus arithmetic error.
    const std::uint32_t kcap = std::min<std::uint32_t>(50, c.kmax());
    if (exact) {
        Rational rhs;
        for (std::uint32_t k = 1; k <= kcap; ++k) {
            rhs += c.exact(1, k) * Rational(6);
            Rational lhs;
            for (std::uint32_t l = 2; l <= c.lmax(); ++l)
                lhs += c.exact(l, k) *
                       Rational(static_cast<long long>(l + k) * l * (l + 1));
            report.z_residuals.emplace_back(k, (lhs - rhs).abs().to_double());
        }
    } else {
        double rhs = 0;
        for (std::uint32_t k = 1; k <= kcap; ++k) {
            rhs += 6.0 * c.value(1, k);
            KahanSum lhs;
            for (std::uint32_t l = 2; l <= c.lmax(); ++l)
                lhs.add(static_cast<double>(l + k) * l * (l + 1) * c.value(l, k));
            report.z_residuals.emplace_back(k, std::abs(lhs.sum - rhs));
        }
    }

    // p(l,k) <= 6/(l(l+1)) cell by cell.
    for (std::uint32_t l = 2; l <= p.lmax(); ++l) {
        for (std::uint32_t k = 0; k <= p.kmax(); ++k) {
            double excess;
            if (p.mode() == Mode::exact) {
                const Rational bound(6, static_cast<unsigned long long>(l) * (l + 1));
                const Rational diff = p.exact(l, k) - bound;
                if (diff.sign() <= 0) continue;
                excess = diff.to_double();
            } else {
                excess = p.value(l, k) - 6.0 / (static_cast<double>(l) * (l + 1));
                if (excess <= 0) continue;
            }
            ++report.p_bound_violations;
            if (excess > report.p_bound_worst_excess) {
                report.p_bound_worst_excess = excess;
                report.p_worst_l = l;
                report.p_worst_k = k;
            }
        }
    }
    return report;
}

} // namespace pasecdeg
