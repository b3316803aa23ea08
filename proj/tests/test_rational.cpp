#include "pasecdeg/rational.hpp"

#include "pasecdeg/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace pasecdeg;

TEST_CASE("rational basics") {
    CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7) * Rational(0) == Rational(0));
    CHECK(Rational(-3, 6).to_string() == "-1/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK((Rational(1, 2) - Rational(3, 4)).to_string() == "-1/4");
    CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
    CHECK(Rational(-1, 4) < Rational(0));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("string round trip and parsing") {
    CHECK(Rational::from_string("2/105") == Rational(2, 105));
    CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
    CHECK(Rational::from_string("17") == Rational(17));
    for (const auto& r : {Rational(2, 3), Rational(-1234567, 89), Rational(0)}) {
        CHECK(Rational::from_string(r.to_string()) == r);
    }
    std::ostringstream os;
    os << Rational(2, 105);
    CHECK(os.str() == "2/105");
}

TEST_CASE("rational grows beyond 64 bits exactly") {
    Rational v(1);
    for (int i = 0; i < 40; ++i) v *= Rational(1000003);
    Rational w = v;
    for (int i = 0; i < 40; ++i) w /= Rational(1000003);
    CHECK(w == Rational(1));
    CHECK(v > Rational(0));
    // 1000003^40 has about 240 digits
    CHECK(v.to_string().size() > 200);
}

// Cross-check against a second exact route: 128-bit integer arithmetic on
// random small fractions.
TEST_CASE("rational arithmetic matches int128 computation") {
    Xoshiro256PlusPlus rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = static_cast<long long>(rng.bounded(2000)) - 1000;
        const auto b = static_cast<long long>(rng.bounded(999)) + 1;
        const auto c = static_cast<long long>(rng.bounded(2000)) - 1000;
        const auto d = static_cast<long long>(rng.bounded(999)) + 1;
        const Rational x(a, static_cast<unsigned long long>(b));
        const Rational y(c, static_cast<unsigned long long>(d));
        // a/b + c/d = (ad + cb) / bd
        const __int128 num = static_cast<__int128>(a) * d + static_cast<__int128>(c) * b;
        const __int128 den = static_cast<__int128>(b) * d;
        const Rational sum = x + y;
        CHECK(sum * Rational(static_cast<long long>(den)) ==
              Rational(static_cast<long long>(num)));
        // products
        const __int128 pnum = static_cast<__int128>(a) * c;
        const Rational prod = x * y;
        CHECK(prod * Rational(static_cast<long long>(den)) ==
              Rational(static_cast<long long>(pnum)));
    }
}
