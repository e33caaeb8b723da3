#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "annular/laurent.hpp"

namespace annular {

namespace detail {

// Long division of ordinary polynomials (min exponent >= 0).
inline std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    LaurentPoly r = a, quo;
    long db = b.max_exp();
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && r.max_exp() >= db) {
        Rational c = r.leading_coeff() / lb;
        long e = r.max_exp() - db;
        LaurentPoly t = LaurentPoly::monomial(c, e);
        quo += t;
        r -= t * b;
    }
    return {quo, r};
}

inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic
    LaurentPoly m;
    Rational inv = Rational(1) / a.leading_coeff();
    for (const auto& [e, c] : a.coeffs()) m += LaurentPoly::monomial(c * inv, e);
    return m;
}

} // namespace detail

// Rational function in q, stored reduced with a monic denominator of minimal
// exponent 0 (unit powers of q live in the numerator).
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc q(long exp = 1) { return RatFunc(LaurentPoly::q(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    const LaurentPoly& as_laurent() const {
        if (!is_laurent()) throw std::domain_error("RatFunc is not a Laurent polynomial");
        return num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Real eval(const Real& q0, const Real& pole_tol = Real(0)) const {
        Real d = den_.eval(q0);
        Real tol = pole_tol;
        if (tol == 0) tol = Real(1e-30);
        if (abs(d) < tol) throw std::domain_error("RatFunc: pole at evaluation point");
        Real v = num_.eval(q0) / d;
        check_finite(v);
        return v;
    }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        long a = num_.min_exp(), b = den_.min_exp();
        LaurentPoly n = num_.inflate(1), d = den_;
        // shift both to ordinary polynomials with nonzero constant term
        n = shift(num_, -a);
        d = shift(den_, -b);
        LaurentPoly g = detail::poly_gcd(n, d);
        if (!g.is_one()) {
            n = detail::divmod(n, g).first;
            d = detail::divmod(d, g).first;
        }
        Rational lead = d.leading_coeff();
        if (lead != 1) {
            n = n * LaurentPoly(Rational(1) / lead);
            d = d * LaurentPoly(Rational(1) / lead);
        }
        num_ = shift(n, a - b);
        den_ = d;
    }

    static LaurentPoly shift(const LaurentPoly& p, long s) {
        LaurentPoly r;
        for (const auto& [e, c] : p.coeffs()) r += LaurentPoly::monomial(c, e + s);
        return r;
    }

    LaurentPoly num_, den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

inline RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unreachable");
}

inline RatFunc qint(long d) { return RatFunc(quantum_integer(d)); }

} // namespace annular
