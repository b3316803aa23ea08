// Two independent exact computations of E N_n(l,k), E P_n(l,k) and M1_n(d).
//
// Route 1, dp_expectations: iterate the one-step conditional-expectation
// recurrences from the initial graph (one vertex, one loop):
//
//   M1_{i+1}(1) = M1_i(1)(1 - 1/(2i+1)) + 2i/(2i+1)
//   M1_{i+1}(2) = M1_i(2)(1 - 2/(2i+1)) + M1_i(1)/(2i+1) + 1/(2i+1)
//   M1_{i+1}(d) = M1_i(d)(1 - d/(2i+1)) + M1_i(d-1)(d-1)/(2i+1),      d >= 3
//
//   EN_{i+1}(l,k) = EN_i(l,k)(1 - (2l+k)/(2i+1))
//                 + EN_i(l-1,k)(l-1)/(2i+1) + EN_i(l,k-1)(l+k-1)/(2i+1)
//                 + [l=1] k M1_i(k)/(2i+1)
//
//   EP_{i+1}(l,k) = EP_i(l,k)(1 - (2l+k-2)/(2i+1))
//                 + EP_i(l-1,k)(l-1)/(2i+1) + EP_i(l,k-1)(l+k-3)/(2i+1)
//                 + [l=2,k=0] 1/(2i+1)
//
// The window [1..lmax]x[0..kmax] is closed under the dependencies (they
// point to smaller l, k) given m1 up to dmax >= kmax, so every in-window
// value is exact. A negative spoil coefficient can only multiply an exact
// zero (a vertex with those degrees cannot exist yet); the DP checks that
// instead of clamping.
//
// Route 2, enumerate_exact: iterate all (2n-1)!! equiprobable slot
// histories, build each graph, and average the censuses of the multigraph
// module. This is the route that pins the second-degree convention.
#pragma once

#include "pasecdeg/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pasecdeg {

enum class OracleMode { exact, float64 };
enum class Provenance { dp, enumeration };

struct DpParts {
    bool en = true;
    bool ep = true;
    // m1 always runs: it is cheap and feeds the EN birth term.
};

inline constexpr std::size_t kDefaultEnumerationCap = 8;
inline constexpr std::size_t kExactDpMaxN = 64;

class ExpectationTable {
public:
    std::size_t n() const { return n_; }
    std::uint32_t lmax() const { return lmax_; }
    std::uint32_t kmax() const { return kmax_; }
    std::uint32_t dmax() const { return dmax_; }
    OracleMode mode() const { return mode_; }
    Provenance provenance() const { return provenance_; }

    // True when the window contains every reachable cell, i.e. the table
    // masses must sum to n exactly.
    bool full_window() const;

    double en(std::uint32_t l, std::uint32_t k) const;
    double ep(std::uint32_t l, std::uint32_t k) const;
    double m1(std::uint32_t d) const { return fm1_.at(d); }

    const Rational& en_exact(std::uint32_t l, std::uint32_t k) const;
    const Rational& ep_exact(std::uint32_t l, std::uint32_t k) const;
    const Rational& m1_exact(std::uint32_t d) const;

    double en_mass() const;   // sum of all EN cells
    double ep_mass() const;   // sum of all EP cells
    double m1_mass() const;   // sum of all M1 entries

    // Column sums EN + EP over l, i.e. the DP estimate of M^2_n(k).
    double second_degree_expectation(std::uint32_t k) const;

    friend ExpectationTable dp_expectations(std::size_t, std::uint32_t, std::uint32_t,
                                            std::uint32_t, OracleMode, DpParts);
    friend ExpectationTable enumerate_exact(std::size_t, std::size_t);

private:
    std::size_t lk(std::uint32_t l, std::uint32_t k) const;

    std::size_t n_ = 0;
    std::uint32_t lmax_ = 0, kmax_ = 0, dmax_ = 0;
    OracleMode mode_ = OracleMode::float64;
    Provenance provenance_ = Provenance::dp;
    std::vector<double> fen_, fep_, fm1_;
    std::vector<Rational> ren_, rep_, rm1_;
};

// Exact-rational mode is limited to n <= kExactDpMaxN; float64 has no cap.
// Requires n >= 1, lmax >= 2, dmax >= kmax (the EN birth term reads M1(k)).
ExpectationTable dp_expectations(std::size_t n, std::uint32_t lmax, std::uint32_t kmax,
                                 std::uint32_t dmax, OracleMode mode,
                                 DpParts parts = DpParts{});

// All (2n-1)!! histories; n above the cap (and the hard limit 16, where the
// double-factorial leaves u64) is an error.
ExpectationTable enumerate_exact(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

struct DiffCell {
    char kind = 'N';           // 'N', 'P' or 'M'
    std::uint32_t l = 0, k = 0; // (l,k), or d in k for kind 'M'
    double dp = 0, enumeration = 0;
};

struct DiffReport {
    std::size_t n = 0;
    OracleMode mode = OracleMode::exact;
    double max_abs_diff = 0;
    bool exact_identical = false; // meaningful in exact mode
    DiffCell worst;
    std::vector<std::string> uncovered; // cells reachable but outside a window
};

DiffReport dp_vs_enum(std::size_t n, OracleMode mode = OracleMode::exact,
                      std::size_t cap = kDefaultEnumerationCap);
DiffReport diff_tables(const ExpectationTable& dp_table, const ExpectationTable& enum_table);

// (2n-1)!! as u64; throws for n > 16.
std::uint64_t double_factorial_histories(std::size_t n);

} // namespace pasecdeg
