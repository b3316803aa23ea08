// Internal helpers shared by the dual-mode (double / Rational) table code.
#pragma once

#include "pasecdeg/rational.hpp"

#include <cstdint>

namespace pasecdeg::detail {

// num/den as a V.
template <typename V>
inline V ratio(long long num, unsigned long long den) {
    return V(num, den);
}

template <>
inline double ratio<double>(long long num, unsigned long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

// Per-step coefficient factory: all update coefficients at step i share the
// denominator 2i+1. The double specialization trades the divisions for one
// reciprocal per step.
template <typename V>
struct StepCoef {
    unsigned long long den;
    explicit StepCoef(unsigned long long d) : den(d) {}
    V operator()(long long num) const { return V(num, den); }
};

template <>
struct StepCoef<double> {
    double inv;
    explicit StepCoef(unsigned long long d) : inv(1.0 / static_cast<double>(d)) {}
    double operator()(long long num) const { return static_cast<double>(num) * inv; }
};

inline bool value_is_zero(double v) { return v == 0.0; }
inline bool value_is_zero(const Rational& v) { return v.is_zero(); }

} // namespace pasecdeg::detail
