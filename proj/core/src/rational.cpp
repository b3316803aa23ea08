#include "pasecdeg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pasecdeg {

Rational::Rational(long long num, unsigned long long den) {
    mpq_init(q_);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_ui(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (mpq_sgn(o.q_) == 0) throw std::invalid_argument("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

std::string Rational::to_string() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefunc)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

Rational Rational::from_string(const std::string& text) {
    Rational r;
    if (text.empty() || mpq_set_str(r.q_, text.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    mpq_canonicalize(r.q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace pasecdeg
