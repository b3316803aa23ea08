// Exact rational arithmetic for the exact-mode tables. Thin value-semantic
// wrapper over GMP's mpq_t; always canonical (reduced, positive denominator).
#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pasecdeg {

class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long long num) { // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
    }

    Rational(long long num, unsigned long long den);

    Rational(const Rational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }

    Rational(Rational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }

    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }

    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    double to_double() const { return mpq_get_d(q_); }

    // "num/den" in lowest terms; integers print without the "/1".
    std::string to_string() const;

    // Parses "num" or "num/den"; throws std::invalid_argument on bad input.
    static Rational from_string(const std::string& text);

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace pasecdeg
