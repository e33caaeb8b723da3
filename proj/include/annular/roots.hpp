#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/numeric.hpp"
#include "annular/partition.hpp"
#include "annular/ratfunc.hpp"

namespace annular {

enum class LieType { A, B, C, D };

inline char type_letter(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    return '?';
}

struct RootSystem {
    LieType type = LieType::A;
    int n = 1;

    RootSystem() = default;
    RootSystem(LieType t, int rank) : type(t), n(rank) {
        if (n < 1 || (type == LieType::D && n < 2))
            throw std::invalid_argument("invalid rank for root system");
    }

    int dim() const { return type == LieType::A ? n + 1 : n; }
    // row cap for partitions indexing L(lambda)
    int max_rows() const { return type == LieType::A ? n + 1 : n; }

    std::string str() const { return std::string(1, type_letter(type)) + std::to_string(n); }

    static RootSystem parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("root system syntax: e.g. A2, B2, D4");
        LieType t;
        switch (s[0]) {
            case 'A': t = LieType::A; break;
            case 'B': t = LieType::B; break;
            case 'C': t = LieType::C; break;
            case 'D': t = LieType::D; break;
            default: throw std::invalid_argument("unknown type letter");
        }
        return RootSystem(t, std::stoi(s.substr(1)));
    }

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

// y of (6.13): n+1 (A), 2n (B), 2n+1 (C), 2n-1 (D)
inline int y_constant(const RootSystem& rs) {
    switch (rs.type) {
        case LieType::A: return rs.n + 1;
        case LieType::B: return 2 * rs.n;
        case LieType::C: return 2 * rs.n + 1;
        case LieType::D: return 2 * rs.n - 1;
    }
    return 0;
}

struct Weight {
    std::vector<Rational> coords;
    int dim() const { return (int)coords.size(); }
};

inline void require_integral(const Partition& p, const RootSystem& rs) {
    if (p.length() > rs.max_rows())
        throw std::invalid_argument("partition exceeds row bound for " + rs.str());
}

// lambda as a weight in epsilon coordinates, with the type-A trace shift.
inline Weight partition_weight(const Partition& p, const RootSystem& rs) {
    require_integral(p, rs);
    Weight w;
    int m = rs.dim();
    w.coords.assign(m, Rational(0));
    for (int i = 0; i < p.length(); ++i) w.coords[i] = p.rows()[i];
    if (rs.type == LieType::A) {
        Rational shift(p.size(), rs.n + 1);
        for (auto& c : w.coords) c -= shift;
    }
    return w;
}

// rho_i = (y - 2i + 1)/2
inline Weight rho_weight(const RootSystem& rs) {
    Weight w;
    int m = rs.dim();
    int y = y_constant(rs);
    for (int i = 1; i <= m; ++i) w.coords.push_back(Rational(y - 2 * i + 1, 2));
    return w;
}

inline Weight fundamental_weight_1(const RootSystem& rs) {
    return partition_weight(Partition{1}, rs);
}

// positive roots as integer epsilon-coordinate vectors
inline std::vector<std::vector<int>> positive_roots(const RootSystem& rs) {
    std::vector<std::vector<int>> roots;
    int m = rs.dim();
    auto vec = [m](int i, int j, int si, int sj) {
        std::vector<int> v(m, 0);
        v[i] = si;
        if (j >= 0) v[j] += sj;
        return v;
    };
    if (rs.type == LieType::A) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) roots.push_back(vec(i, j, 1, -1));
        return roots;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            roots.push_back(vec(i, j, 1, -1));
            roots.push_back(vec(i, j, 1, 1));
        }
    if (rs.type == LieType::B)
        for (int i = 0; i < m; ++i) roots.push_back(vec(i, -1, 1, 0));
    if (rs.type == LieType::C)
        for (int i = 0; i < m; ++i) roots.push_back(vec(i, -1, 2, 0));
    return roots;
}

inline Rational dot(const Weight& w, const std::vector<int>& a) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) s += w.coords[i] * a[i];
    return s;
}

inline Rational dot(const Weight& a, const Weight& b) {
    Rational s(0);
    for (size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

// <lambda, lambda+2rho> = y|lambda| + 2 sum c(b), minus |lambda|^2/(n+1) in type A
inline Rational casimir_pairing(const Partition& p, const RootSystem& rs) {
    require_integral(p, rs);
    Rational v = Rational(y_constant(rs)) * p.size();
    for (const Box& b : p.boxes()) v += 2 * content(b);
    if (rs.type == LieType::A) v -= Rational((long)p.size() * p.size(), rs.n + 1);
    return v;
}

// quantum dimension via the Weyl product over positive roots; pairings use the
// orthonormal epsilon form, computed in the variable u = q^{1/2} and deflated.
inline RatFunc qdim(const Partition& p, const RootSystem& rs) {
    require_integral(p, rs);
    Weight lam = partition_weight(p, rs);
    Weight r = rho_weight(rs);
    Weight lr = lam;
    for (int i = 0; i < lr.dim(); ++i) lr.coords[i] += r.coords[i];
    RatFunc val(1);
    for (const auto& a : positive_roots(rs)) {
        Rational pn = 2 * dot(lr, a); // u-exponent data: [x]_u with x = 2<.,alpha>
        Rational pd = 2 * dot(r, a);
        if (denominator(pn) != 1 || denominator(pd) != 1)
            throw std::domain_error("unsupported weight: non-integral root pairing");
        val *= RatFunc(quantum_integer((long)numerator(pn)), quantum_integer((long)numerator(pd)));
    }
    // collapse u = q^{1/2}: every surviving exponent must be even
    if (!val.is_laurent()) throw std::logic_error("qdim did not reduce to a Laurent polynomial");
    return RatFunc(val.num().deflate(2));
}

// type-A hook-content formula (6.21)
inline RatFunc qdim_hook_typeA(const Partition& p, int n) {
    if (p.length() > n + 1) throw std::invalid_argument("partition exceeds n+1 rows");
    RatFunc val(1);
    auto hooks = hook_lengths(p);
    for (const Box& b : p.boxes())
        val *= RatFunc(quantum_integer(n + 1 + content(b)), quantum_integer(hooks[b]));
    return val;
}

// the single box by which the larger partition exceeds the smaller
inline Box box_difference(const Partition& larger, const Partition& smaller) {
    if (larger.size() != smaller.size() + 1 || !larger.contains(smaller))
        throw std::invalid_argument("partitions do not differ by one box");
    for (int r = 1; r <= larger.length(); ++r)
        if (larger.row(r - 1) != smaller.row(r - 1)) return Box{r, larger.row(r - 1)};
    throw std::logic_error("unreachable");
}

// exponent data of Thm 6.17d: -y (stay), 2c(add), -2(c(remove)+y)
inline int tilde_c_exponent(const Partition& mu_pm, const Partition& mu, const RootSystem& rs) {
    int y = y_constant(rs);
    if (mu_pm == mu) return -y;
    if (mu_pm.size() == mu.size() + 1 && mu_pm.contains(mu))
        return 2 * content(box_difference(mu_pm, mu));
    if (mu.size() == mu_pm.size() + 1 && mu.contains(mu_pm))
        return -2 * (content(box_difference(mu, mu_pm)) + y);
    throw std::invalid_argument("tilde_c: partitions are not one step apart");
}

// z of Thm 6.17c: q^{2n} (B), -q^{2n+1} (C), q^{2n-1} (D)
inline RatFunc z_param(const RootSystem& rs) {
    switch (rs.type) {
        case LieType::B: return RatFunc(LaurentPoly::q(2 * rs.n));
        case LieType::C: return RatFunc(-LaurentPoly::q(2 * rs.n + 1));
        case LieType::D: return RatFunc(LaurentPoly::q(2 * rs.n - 1));
        case LieType::A:
            throw std::invalid_argument("z_param: type A has no BMW parameter z");
    }
    throw std::logic_error("unreachable");
}

} // namespace annular
