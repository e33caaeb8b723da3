#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>

#include "annular/rational.hpp"

namespace annular {

// Arbitrary-precision real used by every numeric backend.  Precision is a
// process-wide setting; tests that probe convergence bump it and restore.
using Real = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

inline void set_precision_bits(unsigned bits) {
    Real::default_precision(bits_to_digits10(bits));
}

inline unsigned precision_bits() {
    return static_cast<unsigned>(Real::default_precision() / 0.30103);
}

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned bits) : saved(Real::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { Real::default_precision(saved); }
};

inline void check_finite(const Real& x) {
    if (!boost::math::isfinite(x))
        throw std::domain_error("numeric value is not finite");
}

inline Real to_real(const Rational& r) {
    return Real(numerator(r)) / Real(denominator(r));
}

// q0^e for rational e (B-type Casimir data and type-A shifts are fractional).
inline Real rpow(const Real& base, const Rational& e) {
    if (denominator(e) == 1) return pow(base, static_cast<long>(numerator(e)));
    Real v = pow(base, to_real(e));
    check_finite(v);
    return v;
}

inline Real rpow(const Real& base, long e) { return pow(base, e); }

} // namespace annular
