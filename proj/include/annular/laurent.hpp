#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "annular/numeric.hpp"
#include "annular/rational.hpp"

namespace annular {

// Laurent polynomial in q with exact rational coefficients.
// Canonical form: no zero coefficients stored.
class LaurentPoly {
  public:
    using Coeffs = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, long exp) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }
    static LaurentPoly q(long exp = 1) { return monomial(1, exp); }

    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    Rational coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    long min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }
    long max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }
    const Rational& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading_coeff of zero polynomial");
        return coeffs_.rbegin()->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [e1, c1] : a.coeffs_)
            for (const auto& [e2, c2] : b.coeffs_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ < b.coeffs_;
    }

    // q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    // q -> q^s, s > 0
    LaurentPoly inflate(long s) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e * s] = c;
        return r;
    }

    // inverse of inflate(s); throws if some exponent is not divisible by s
    LaurentPoly deflate(long s) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) {
            if (e % s != 0) throw std::domain_error("deflate: exponent not divisible");
            r.coeffs_[e / s] = c;
        }
        return r;
    }

    Real eval(const Real& q0) const {
        Real v(0);
        for (const auto& [e, c] : coeffs_) v += to_real(c) * rpow(q0, e);
        check_finite(v);
        return v;
    }

    // Terms in decreasing exponent, e.g. "q^2 + 1 + q^-2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            Rational c = it->second;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += term_str(c, it->first);
        }
        return out;
    }

  private:
    static std::string term_str(const Rational& c, long e) {
        std::string cs;
        if (c != 1 || e == 0) {
            cs = denominator(c) == 1 ? numerator(c).str() : "(" + c.str() + ")";
        }
        if (e == 0) return cs;
        std::string qs = e == 1 ? "q" : "q^" + std::to_string(e);
        return cs + qs;
    }

    void add_term(long e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Coeffs coeffs_;
};

// [d] = (q^d - q^-d)/(q - q^-1): q^{d-1} + q^{d-3} + ... + q^{-(d-1)}.
inline LaurentPoly quantum_integer(long d) {
    if (d == 0) return LaurentPoly();
    if (d < 0) return -quantum_integer(-d);
    LaurentPoly r;
    for (long e = d - 1; e >= -(d - 1); e -= 2) r += LaurentPoly::q(e);
    return r;
}

} // namespace annular
