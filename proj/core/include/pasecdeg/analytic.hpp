// The limiting constant tables and closed forms.
//
//   c(l,0) = c(0,k) = 0
//   c(1,k) = (2k^2+14k) / ((k+1)(k+2)(k+3)(k+4))
//   c(l,k) = c(l,k-1)(l+k-1)/(2l+k+2) + c(l-1,k)(l-1)/(2l+k+2),  l>1, k>0
//
//   p(2,0) = 1,  p(l,k) = 0 for l<2 or (l=2, k>0)
//   p(l,k) = p(l,k-1)(l+k-3)/(2l+k-2) + p(l-1,k)(l-1)/(2l+k-2),  l>=3, k>=0
//
// Every in-window cell is exact: the recurrences only look left and up.
//
// Row sums of c converge to 4/(l(l+1)(l+2)) but the k-tails are heavy
// (c(l,k) ~ (4/(l(l+1)))/k^2), so identity checks against the row-sum and
// total-sum closed forms account for the truncated tails exactly. Summing
// the recurrence over k > K telescopes into
//
//   (l+2) T_l(K) = (l+K) c(l,K) + (l-1) T_{l-1}(K),      l >= 2,
//   T_1(K) = -2/(K+2) + 8/(K+3) - 4/(K+4)                (partial fractions)
//
// where T_l(K) = sum_{k>K} c(l,k). Rows beyond Lmax contribute
// 2/((Lmax+1)(Lmax+2)) in total. With these corrections the residuals of
// identity_checks measure arithmetic error only.
#pragma once

#include "pasecdeg/rational.hpp"

#include <cstdint>
#include <vector>

namespace pasecdeg {

enum class TableKind { c, p };
enum class Mode { exact, float64 };

class AnalyticTable {
public:
    TableKind kind() const { return kind_; }
    Mode mode() const { return mode_; }
    std::uint32_t lmax() const { return lmax_; }
    std::uint32_t kmax() const { return kmax_; }

    double value(std::uint32_t l, std::uint32_t k) const { return fcells_[index(l, k)]; }
    const Rational& exact(std::uint32_t l, std::uint32_t k) const;

    // T_l(kmax), the exact mass of row l beyond the table. c-tables only.
    double row_tail(std::uint32_t l) const;
    const Rational& row_tail_exact(std::uint32_t l) const;

    // Total mass outside the table: row tails plus whole rows l > lmax.
    double off_table_mass() const;
    Rational off_table_mass_exact() const;

    static double row_sum_closed(std::uint32_t l);       // 4/(l(l+1)(l+2))
    static Rational row_sum_closed_exact(std::uint32_t l);

    friend AnalyticTable c_table(std::uint32_t, std::uint32_t, Mode);
    friend AnalyticTable p_table(std::uint32_t, std::uint32_t, Mode);

private:
    std::size_t index(std::uint32_t l, std::uint32_t k) const;

    TableKind kind_ = TableKind::c;
    Mode mode_ = Mode::float64;
    std::uint32_t lmax_ = 0, kmax_ = 0;
    std::vector<double> fcells_;
    std::vector<Rational> rcells_;
    std::vector<double> frow_tail_;
    std::vector<Rational> rrow_tail_;
};

AnalyticTable c_table(std::uint32_t lmax, std::uint32_t kmax, Mode mode);
AnalyticTable p_table(std::uint32_t lmax, std::uint32_t kmax, Mode mode = Mode::exact);

// Lemma closed forms. Throw std::invalid_argument below their domain.
double m1_closed(double n, std::uint32_t d); // 4n/(d(d+1)(d+2)), d >= 1
double m2_leading(double n, std::uint32_t k); // 4n/k^2, k >= 1

// C(0) = 0, C(k) = max(C(k-1), c(k,k) 2^k/(k-1)!): the smallest constants
// for which c(l,k) <= C(k) 2^{-l} (l-1)!/(l-k)! holds at l = k and then
// for all l >= k by induction. Requires an exact c-table with
// lmax, kmax >= upto.
std::vector<Rational> constructive_C(const AnalyticTable& c_exact, std::uint32_t upto);

// The bound above at one cell, exact arithmetic. Requires l >= k >= 1.
bool c_bound_holds(const AnalyticTable& c_exact, const std::vector<Rational>& C,
                   std::uint32_t l, std::uint32_t k);

struct ColumnMoments {
    std::uint32_t k = 0;
    double x = 0, y = 0, z = 0; // truncated sums over l in [2, lmax]
    Rational x_exact, y_exact, z_exact; // exact mode only
    // Rigorous upper bounds on the truncated l > lmax tails, from the
    // constructive C(k) bound dominated by a geometric series. Valid only
    // when lmax > 2k+1 (otherwise the ratio test fails and the flag is off).
    double x_tail_bound = 0, y_tail_bound = 0, z_tail_bound = 0;
    bool tail_bound_valid = false;
};

// tol = 0: fill bounds and the validity flag only. tol > 0: additionally
// throw std::runtime_error if the z tail bound cannot be brought under tol
// at this lmax.
ColumnMoments column_moments(const AnalyticTable& c, std::uint32_t k, double tol = 0);

struct IdentityReport {
    // |sum of all c cells + off-table mass - 1|
    double total_residual = 0;
    // per-row |partial sum + T_l - 4/(l(l+1)(l+2))|, l <= min(20, lmax)
    std::vector<std::pair<std::uint32_t, double>> row_residuals;
    // |sum_{l=2..lmax} (l+k)l(l+1)c(l,k) - 6 sum_{s<=k} c(1,s)|, k <= min(50, kmax)
    std::vector<std::pair<std::uint32_t, double>> z_residuals;
    std::uint64_t p_bound_violations = 0;
    double p_bound_worst_excess = 0;
    std::uint32_t p_worst_l = 0, p_worst_k = 0;

    double worst_row_residual() const;
    double worst_z_residual() const;
};

IdentityReport identity_checks(const AnalyticTable& c, const AnalyticTable& p);

} // namespace pasecdeg
