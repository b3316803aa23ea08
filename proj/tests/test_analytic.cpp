#include "pasecdeg/analytic.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace pasecdeg;

TEST_CASE("c table anchor values") {
    const auto c = c_table(6, 6, Mode::exact);
    CHECK(c.exact(1, 1) == Rational(2, 15));
    CHECK(c.exact(1, 2) == Rational(1, 10));
    CHECK(c.exact(1, 3) == Rational(1, 14));
    CHECK(c.exact(1, 4) == Rational(11, 210));
    CHECK(c.exact(2, 1) == Rational(2, 105)); // c(1,1)/7
    CHECK(c.exact(3, 2) == Rational(17, 3024));
    CHECK(c.exact(5, 0) == Rational(0));
    for (std::uint32_t k = 0; k <= 6; ++k) CHECK(c.exact(0, k) == Rational(0));
    for (std::uint32_t l = 0; l <= 6; ++l) CHECK(c.exact(l, 0) == Rational(0));
}

TEST_CASE("p table anchor values") {
    const auto p = p_table(20, 6, Mode::exact);
    CHECK(p.exact(2, 0) == Rational(1));
    CHECK(p.exact(3, 0) == Rational(1, 2));
    CHECK(p.exact(4, 0) == Rational(1, 4));
    CHECK(p.exact(3, 1) == Rational(1, 10));
    for (std::uint32_t k = 1; k <= 6; ++k) CHECK(p.exact(2, k) == Rational(0));
    // p(l,0) = 2^{-(l-2)}
    Rational expected(1);
    for (std::uint32_t l = 2; l <= 20; ++l) {
        CHECK(p.exact(l, 0) == expected);
        expected /= Rational(2);
    }
}

TEST_CASE("tables are nonnegative and p respects its cell bound") {
    const auto c = c_table(40, 40, Mode::exact);
    const auto p = p_table(40, 40, Mode::exact);
    for (std::uint32_t l = 1; l <= 40; ++l) {
        for (std::uint32_t k = 0; k <= 40; ++k) {
            CHECK(c.exact(l, k).sign() >= 0);
            CHECK(p.exact(l, k).sign() >= 0);
            if (l >= 2)
                CHECK(p.exact(l, k) <=
                      Rational(6, static_cast<unsigned long long>(l) * (l + 1)));
        }
    }
}

TEST_CASE("closed forms") {
    CHECK(m1_closed(9, 1) == doctest::Approx(6.0));      // 2n/3
    CHECK(m1_closed(12, 2) == doctest::Approx(2.0));     // n/6
    CHECK(m1_closed(0, 5) == 0.0);
    CHECK_THROWS_AS(m1_closed(10, 0), std::invalid_argument);
    CHECK(m2_leading(1e6, 100) == doctest::Approx(400.0));
    CHECK(m2_leading(7, 2) == doctest::Approx(7.0));
    CHECK_THROWS_AS(m2_leading(10, 0), std::invalid_argument);
}

TEST_CASE("row tails make the row-sum identity exact") {
    const auto c = c_table(24, 60, Mode::exact);
    for (std::uint32_t l = 1; l <= 20; ++l) {
        Rational row;
        for (std::uint32_t k = 0; k <= c.kmax(); ++k) row += c.exact(l, k);
        row += c.row_tail_exact(l);
        CHECK(row == AnalyticTable::row_sum_closed_exact(l));
    }
}

TEST_CASE("total mass identity is exact with tail accounting") {
    const auto c = c_table(30, 30, Mode::exact);
    Rational total = c.off_table_mass_exact();
    for (std::uint32_t l = 1; l <= 30; ++l)
        for (std::uint32_t k = 0; k <= 30; ++k) total += c.exact(l, k);
    CHECK(total == Rational(1));
}

TEST_CASE("identity checks on exact tables") {
    const auto c = c_table(60, 60, Mode::exact);
    const auto p = p_table(60, 60, Mode::exact);
    const auto report = identity_checks(c, p);
    CHECK(report.total_residual == 0.0);
    CHECK(report.worst_row_residual() == 0.0);
    CHECK(report.p_bound_violations == 0);
    // The z residual of the exact table is pure truncation: tiny for small k
    // at this window, and never above the rigorous column tail bound.
    for (const auto& [k, r] : report.z_residuals) {
        if (k <= 6) CHECK(r < 1e-12);
        if (k <= 25) {
            const auto m = column_moments(c, k);
            REQUIRE(m.tail_bound_valid);
            CHECK(r <= m.z_tail_bound * (1 + 1e-9) + 1e-300);
        }
    }
}

TEST_CASE("identity residuals shrink as the window grows") {
    const auto p = p_table(2, 2, Mode::float64);
    const auto small = identity_checks(c_table(40, 40, Mode::float64), p);
    const auto large = identity_checks(c_table(80, 80, Mode::float64), p);
    for (std::size_t i = 0; i < 12; ++i) {
        const auto [k, rs] = small.z_residuals[i];
        const auto [k2, rl] = large.z_residuals[i];
        CHECK(k == k2);
        CHECK(rl <= rs + 1e-15);
    }
    CHECK(large.total_residual <= small.total_residual + 1e-12);
}

TEST_CASE("exact and float cells agree to 12 significant digits") {
    const auto e = c_table(40, 40, Mode::exact);
    const auto f = c_table(40, 40, Mode::float64);
    for (std::uint32_t l = 1; l <= 40; ++l) {
        for (std::uint32_t k = 0; k <= 40; ++k) {
            const double exact = e.exact(l, k).to_double();
            const double approx = f.value(l, k);
            if (exact == 0.0) {
                CHECK(approx == 0.0);
            } else {
                CHECK(std::abs(approx / exact - 1.0) < 1e-12);
            }
        }
    }
    const auto ep = p_table(40, 40, Mode::exact);
    const auto fp = p_table(40, 40, Mode::float64);
    for (std::uint32_t l = 2; l <= 40; ++l)
        for (std::uint32_t k = 0; k <= 40; ++k)
            if (ep.exact(l, k).sign() > 0)
                CHECK(std::abs(fp.value(l, k) / ep.exact(l, k).to_double() - 1.0) < 1e-12);
}

TEST_CASE("constructive C(k) and the factorial bound") {
    const auto c = c_table(60, 60, Mode::exact);
    const auto C = constructive_C(c, 20);
    CHECK(C[0] == Rational(0));
    CHECK(C[1] == Rational(4, 15)); // c(1,1) * 2 / 0!
    for (std::uint32_t k = 2; k <= 20; ++k) CHECK(C[k] >= C[k - 1]);
    for (std::uint32_t k = 1; k <= 20; ++k)
        for (std::uint32_t l = k; l <= 60; ++l) CHECK(c_bound_holds(c, C, l, k));
}

TEST_CASE("column moments") {
    const auto c = c_table(320, 55, Mode::float64);

    // column 0 vanishes
    const auto m0 = column_moments(c, 0);
    CHECK(m0.x == 0.0);
    CHECK(m0.y == 0.0);
    CHECK(m0.z == 0.0);

    double running_c1 = 0;
    for (std::uint32_t k = 1; k <= 50; ++k) {
        const auto m = column_moments(c, k);
        // termwise l >= 2 ordering
        CHECK(m.x <= m.y / 2 + 1e-15);
        CHECK(m.y / 2 <= m.z / 6 + 1e-15);
        // 0 <= z_k <= (1/k) 6 sum_{s<=k} c(1,s)
        running_c1 += c.value(1, k);
        CHECK(m.z >= 0.0);
        CHECK(m.z <= 6.0 * running_c1 / k + 1e-12);
        CHECK(m.tail_bound_valid);
        // C(k) is pinned at C(1) = 4/15, so the rigorous bound is loose for
        // large k; at this window it stays under 1e-9 for k <= 30.
        if (k <= 30) CHECK(m.z_tail_bound < 1e-9);
    }

    // x_k asymptotics: |x_k - 2/((k+1)(k+2))| k^3 / ln^2 k bounded. The
    // bound constant is frozen from a pilot run (max 2.304 at k=2).
    double worst = 0;
    for (std::uint32_t k = 2; k <= 50; ++k) {
        const auto m = column_moments(c, k);
        const double resid = std::abs(m.x - 2.0 / (static_cast<double>(k + 1) * (k + 2)));
        const double lk = std::log(static_cast<double>(k));
        worst = std::max(worst, resid * k * k * k / (lk * lk));
    }
    CHECK(worst < 4.0);
}

TEST_CASE("column moments tail tolerance errors") {
    const auto c = c_table(20, 20, Mode::float64);
    CHECK_THROWS_AS(column_moments(c, 15, 1e-6), std::runtime_error);
    const auto wide = c_table(260, 20, Mode::float64);
    CHECK_NOTHROW(column_moments(wide, 15, 1e-6));
}

TEST_CASE("analytic table input validation") {
    CHECK_THROWS_AS(c_table(0, 5, Mode::exact), std::invalid_argument);
    CHECK_THROWS_AS(p_table(1, 5, Mode::exact), std::invalid_argument);
    const auto f = c_table(4, 4, Mode::float64);
    CHECK_THROWS_AS(f.exact(1, 1), std::logic_error);
    CHECK_THROWS_AS(f.value(5, 0), std::out_of_range);
    const auto p = p_table(4, 4, Mode::exact);
    CHECK_THROWS_AS(p.row_tail(2), std::logic_error);
    CHECK_THROWS_AS(column_moments(p, 1), std::invalid_argument);
}
