#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "annular/roots.hpp"

namespace annular {

// Signed permutation w(eps_i) = sign_i * eps_{perm_i}; type A is unsigned,
// type D has an even number of sign flips.
struct SignedPermutation {
    std::vector<int> perm;  // 0-based images
    std::vector<int> signs; // +1/-1
    int det = 1;            // (-1)^{l(w)}
};

inline std::uint64_t weyl_order(const RootSystem& rs) {
    std::uint64_t f = 1;
    int m = rs.dim();
    for (int i = 2; i <= m; ++i) f *= i;
    switch (rs.type) {
        case LieType::A: return f;
        case LieType::B:
        case LieType::C: return f << rs.n;
        case LieType::D: return f << (rs.n - 1);
    }
    return f;
}

template <typename F>
void for_each_weyl_element(const RootSystem& rs, F&& fn) {
    int m = rs.dim();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    do {
        int psign = 1;
        {
            std::vector<bool> seen(m, false);
            for (int i = 0; i < m; ++i) {
                if (seen[i]) continue;
                int j = i, len = 0;
                while (!seen[j]) {
                    seen[j] = true;
                    j = perm[j];
                    ++len;
                }
                if (len % 2 == 0) psign = -psign;
            }
        }
        if (rs.type == LieType::A) {
            SignedPermutation w{perm, std::vector<int>(m, 1), psign};
            fn(w);
        } else {
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
                int neg = __builtin_popcountll(mask);
                if (rs.type == LieType::D && neg % 2 == 1) continue;
                SignedPermutation w;
                w.perm = perm;
                w.signs.assign(m, 1);
                for (int i = 0; i < m; ++i)
                    if (mask >> i & 1) w.signs[i] = -1;
                w.det = psign * (neg % 2 ? -1 : 1);
                fn(w);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline Weight apply(const SignedPermutation& w, const Weight& v) {
    Weight out;
    out.coords.assign(v.coords.size(), Rational(0));
    for (size_t j = 0; j < v.coords.size(); ++j)
        out.coords[w.perm[j]] = w.signs[j] * v.coords[j];
    return out;
}

namespace detail {

// A_x(y) = sum_w det(w) q0^{2<x, w(y)>}  (exponent 2 from q = e^{h/2})
inline Real weyl_alternating_sum(const Weight& x, const Weight& y, const RootSystem& rs,
                                 const Real& q0) {
    Real tot(0);
    for_each_weyl_element(rs, [&](const SignedPermutation& w) {
        tot += w.det * rpow(q0, 2 * dot(x, apply(w, y)));
    });
    return tot;
}

} // namespace detail

// Q_1 via the Weyl-sum formula, normalized so that it agrees with the
// tensor-decomposition formula of the Markov trace parameters:
//   Q_1 = [A_{nu+rho}(mu+rho) * A_rho(rho)] / [A_rho(mu+rho) * A_{nu+rho}(rho)].
inline Real q1_weyl_formula(const Weight& mu, const Weight& nu, const RootSystem& rs,
                            const Real& q0) {
    if (weyl_order(rs) > 1000000ull)
        throw std::invalid_argument("q1_weyl_formula: Weyl group too large to enumerate");
    Weight r = rho_weight(rs);
    if ((int)mu.coords.size() != r.dim() || (int)nu.coords.size() != r.dim())
        throw std::invalid_argument("q1_weyl_formula: weight dimension mismatch");
    Weight mur = mu, nur = nu;
    for (int i = 0; i < r.dim(); ++i) {
        mur.coords[i] += r.coords[i];
        nur.coords[i] += r.coords[i];
    }
    Real num = detail::weyl_alternating_sum(nur, mur, rs, q0) *
               detail::weyl_alternating_sum(r, r, rs, q0);
    Real den = detail::weyl_alternating_sum(r, mur, rs, q0) *
               detail::weyl_alternating_sum(nur, r, rs, q0);
    Real scale = abs(detail::weyl_alternating_sum(r, r, rs, q0));
    if (abs(den) < scale * Real(1e-20))
        throw std::domain_error("q1_weyl_formula: denominator vanishes (non-generic q0)");
    Real v = num / den;
    check_finite(v);
    return v;
}

inline Real q1_weyl_formula(const Partition& mu, const RootSystem& rs, const Real& q0) {
    return q1_weyl_formula(partition_weight(mu, rs), fundamental_weight_1(rs), rs, q0);
}

} // namespace annular
