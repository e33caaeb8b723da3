#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/braid.hpp"
#include "annular/matrix.hpp"
#include "annular/ratfunc.hpp"
#include "annular/report.hpp"
#include "annular/tableaux.hpp"

namespace annular {

// Exact seminormal representation of the affine Hecke algebra on the standard
// tableaux of a skew shape, in the square-root-free gauge: the swap partner
// later in basis order receives coefficient 1, its mirror the full product
// (q^-1 + d_T)(q^-1 + d_S).  X^{eps_i} acts diagonally by q^{2 c(T(i))}.
class SeminormalRep {
  public:
    explicit SeminormalRep(SkewShape shape, bool printed_denominator_variant = false)
        : shape_(std::move(shape)), basis_(enumerate_standard_tableaux(shape_)) {
        k_ = shape_.size();
        build(printed_denominator_variant);
    }

    const SkewShape& shape() const { return shape_; }
    int strands() const { return k_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<StandardTableau>& basis() const { return basis_; }

    const Matrix<RatFunc>& t_matrix(int i) const { return at(tmats_, i, "T"); }
    const Matrix<RatFunc>& t_inverse(int i) const { return at(tinvs_, i, "T^-1"); }
    // X^{eps_i} for 1 <= i <= k, produced directly from contents
    const Matrix<RatFunc>& x_matrix(int i = 1) const {
        if (i < 1 || i > k_) throw std::invalid_argument("X^{eps_i}: index out of range");
        return xmats_[i - 1];
    }
    Matrix<RatFunc> x_inverse(int i = 1) const {
        Matrix<RatFunc> m(dim(), dim());
        const Matrix<RatFunc>& x = x_matrix(i);
        for (int a = 0; a < dim(); ++a) m(a, a) = x(a, a).inv();
        return m;
    }

    Matrix<RatFunc> letter_matrix(const BraidLetter& l) const {
        switch (l.kind) {
            case BraidLetter::Kind::T: return t_matrix(l.index);
            case BraidLetter::Kind::Tinv: return t_inverse(l.index);
            case BraidLetter::Kind::X: return x_matrix(1);
            case BraidLetter::Kind::Xinv: return x_inverse(1);
            case BraidLetter::Kind::E:
                throw std::invalid_argument("Hecke representation has no E generators");
        }
        throw std::logic_error("unreachable");
    }

  private:
    static const Matrix<RatFunc>& at(const std::vector<Matrix<RatFunc>>& v, int i,
                                     const char* what) {
        if (i < 1 || i > (int)v.size())
            throw std::invalid_argument(std::string(what) + ": generator index out of range");
        return v[i - 1];
    }

    void build(bool printed_denominator_variant) {
        int N = dim();
        RatFunc q = RatFunc::q(1), qinv = RatFunc::q(-1);
        RatFunc qminus = q - qinv;
        for (int i = 1; i <= k_; ++i) {
            Matrix<RatFunc> x(N, N);
            for (int a = 0; a < N; ++a)
                x(a, a) = RatFunc::q(2 * content(basis_[a].box_of(i)));
            xmats_.push_back(std::move(x));
        }
        for (int j = 1; j <= k_ - 1; ++j) {
            Matrix<RatFunc> t(N, N);
            std::map<std::vector<int>, int> index;
            for (int a = 0; a < N; ++a) index[basis_[a].reading_word()] = a;
            std::vector<RatFunc> diag(N);
            for (int a = 0; a < N; ++a) {
                int ci = content(basis_[a].box_of(j));
                int cip = content(basis_[a].box_of(j + 1));
                if (ci == cip)
                    throw std::logic_error("degenerate denominator: equal adjacent contents");
                long e = printed_denominator_variant ? 2 * ci - cip : 2 * (ci - cip);
                diag[a] = qminus / (RatFunc(1) - RatFunc::q(e));
                t(a, a) = diag[a];
            }
            for (int a = 0; a < N; ++a) {
                StandardTableau sw = basis_[a].with_swapped(j);
                if (!sw.is_standard()) continue;
                int b = index.at(sw.reading_word());
                if (a < b) {
                    t(b, a) = RatFunc(1);
                    t(a, b) = (qinv + diag[a]) * (qinv + diag[b]);
                }
            }
            // T^-1 = T - (q - q^-1)
            Matrix<RatFunc> tinv = t;
            for (int a = 0; a < N; ++a) tinv(a, a) = tinv(a, a) - qminus;
            tmats_.push_back(std::move(t));
            tinvs_.push_back(std::move(tinv));
        }
    }

    SkewShape shape_;
    std::vector<StandardTableau> basis_;
    int k_ = 0;
    std::vector<Matrix<RatFunc>> tmats_, tinvs_, xmats_;
};

inline SeminormalRep build_hecke_rep(const SkewShape& shape) { return SeminormalRep(shape); }

inline Matrix<RatFunc> matrix_of_word(const SeminormalRep& rep, const AffineBraidWord& w) {
    return matrix_of_word_impl<SeminormalRep, RatFunc>(rep, w);
}

// Exact checks of (3.2a-d) and the quadratic relation (6.1).
inline VerificationReport verify_hecke_relations(const SeminormalRep& rep) {
    VerificationReport rep_out;
    int k = rep.strands();
    int N = rep.dim();
    auto I = Matrix<RatFunc>::identity(N);
    RatFunc qminus = RatFunc::q(1) - RatFunc::q(-1);
    for (int i = 1; i <= k - 1; ++i) {
        const auto& Ti = rep.t_matrix(i);
        rep_out.add("(6.1) T" + std::to_string(i) + "^2 = (q-q^-1)T + 1",
                    (Ti * Ti - (qminus * Ti + I)).all_zero());
        for (int j = i + 2; j <= k - 1; ++j)
            rep_out.add("(3.2a) T" + std::to_string(i) + " T" + std::to_string(j) + " commute",
                        (Ti * rep.t_matrix(j) - rep.t_matrix(j) * Ti).all_zero());
        if (i + 1 <= k - 1) {
            const auto& Tj = rep.t_matrix(i + 1);
            rep_out.add("(3.2b) braid T" + std::to_string(i) + " T" + std::to_string(i + 1),
                        (Ti * Tj * Ti - Tj * Ti * Tj).all_zero());
        }
    }
    if (k >= 2) {
        const auto& X = rep.x_matrix(1);
        const auto& T1 = rep.t_matrix(1);
        rep_out.add("(3.2c) X T1 X T1 = T1 X T1 X",
                    (X * T1 * X * T1 - T1 * X * T1 * X).all_zero());
        for (int i = 2; i <= k - 1; ++i)
            rep_out.add("(3.2d) X T" + std::to_string(i) + " commute",
                        (X * rep.t_matrix(i) - rep.t_matrix(i) * X).all_zero());
    }
    // consistency of the directly-built X^{eps_i} with the word expansion (3.3)
    for (int i = 1; i <= k; ++i)
        rep_out.add("(3.3) X^{eps_" + std::to_string(i) + "} = word expansion",
                    (rep.x_matrix(i) - matrix_of_word(rep, expand_xi(i, k))).all_zero());
    return rep_out;
}

// Thm 6.17b: prod over addable boxes b of mu of (X^{eps_1} - q^{2c(b)}) kills
// every representation lambda/mu with lambda reachable in k addable steps.
inline VerificationReport cyclotomic_check(const Partition& mu, int k, int n) {
    RootSystem rs(LieType::A, n);
    auto ar = addable_removable(mu, rs);
    VerificationReport out;
    std::vector<Partition> frontier{mu};
    for (int step = 0; step < k; ++step) {
        std::vector<Partition> next;
        for (const Partition& p : frontier)
            for (const Box& b : addable_removable(p, rs).addable)
                next.push_back(p.with_box_added(b));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
    }
    for (const Partition& lam : frontier) {
        SeminormalRep rep(SkewShape(lam, mu));
        Matrix<RatFunc> prod = Matrix<RatFunc>::identity(rep.dim());
        auto I = Matrix<RatFunc>::identity(rep.dim());
        for (const Box& b : ar.addable)
            prod = prod * (rep.x_matrix(1) - RatFunc::q(2 * content(b)) * I);
        out.add("cyclotomic annihilation on " + lam.str() + "/" + mu.str(), prod.all_zero());
    }
    return out;
}

// Numeric seminormal representation in the orthogonal gauge: both off-diagonal
// entries are the square root of (q^-1 + d_T)(q^-1 + d_S).  Used by the
// gauge-independence checks only.
class OrthogonalHeckeRep {
  public:
    OrthogonalHeckeRep(SkewShape shape, Real q0)
        : shape_(std::move(shape)), q0_(std::move(q0)),
          basis_(enumerate_standard_tableaux(shape_)) {
        k_ = shape_.size();
        build();
    }

    int strands() const { return k_; }
    int dim() const { return (int)basis_.size(); }

    Matrix<Real> letter_matrix(const BraidLetter& l) const {
        switch (l.kind) {
            case BraidLetter::Kind::T: return tmats_.at(l.index - 1);
            case BraidLetter::Kind::Tinv: {
                Matrix<Real> t = tmats_.at(l.index - 1);
                Real qm = q0_ - 1 / q0_;
                for (int a = 0; a < dim(); ++a) t(a, a) -= qm;
                return t;
            }
            case BraidLetter::Kind::X: return xmat_;
            case BraidLetter::Kind::Xinv: {
                Matrix<Real> x = xmat_;
                for (int a = 0; a < dim(); ++a) x(a, a) = 1 / x(a, a);
                return x;
            }
            case BraidLetter::Kind::E:
                throw std::invalid_argument("Hecke representation has no E generators");
        }
        throw std::logic_error("unreachable");
    }

  private:
    void build() {
        int N = dim();
        Real qm = q0_ - 1 / q0_;
        xmat_ = Matrix<Real>(N, N);
        for (int a = 0; a < N; ++a)
            xmat_(a, a) = rpow(q0_, 2 * content(basis_[a].box_of(1)));
        std::map<std::vector<int>, int> index;
        for (int a = 0; a < N; ++a) index[basis_[a].reading_word()] = a;
        for (int j = 1; j <= k_ - 1; ++j) {
            Matrix<Real> t(N, N);
            std::vector<Real> diag(N);
            for (int a = 0; a < N; ++a) {
                int ci = content(basis_[a].box_of(j));
                int cip = content(basis_[a].box_of(j + 1));
                diag[a] = qm / (1 - rpow(q0_, 2 * (ci - cip)));
                t(a, a) = diag[a];
            }
            for (int a = 0; a < N; ++a) {
                StandardTableau sw = basis_[a].with_swapped(j);
                if (!sw.is_standard()) continue;
                int b = index.at(sw.reading_word());
                if (a < b) {
                    Real v = sqrt((1 / q0_ + diag[a]) * (1 / q0_ + diag[b]));
                    t(b, a) = v;
                    t(a, b) = v;
                }
            }
            tmats_.push_back(std::move(t));
        }
    }

    SkewShape shape_;
    Real q0_;
    std::vector<StandardTableau> basis_;
    int k_ = 0;
    std::vector<Matrix<Real>> tmats_;
    Matrix<Real> xmat_;
};

inline Matrix<Real> matrix_of_word(const OrthogonalHeckeRep& rep, const AffineBraidWord& w) {
    return matrix_of_word_impl<OrthogonalHeckeRep, Real>(rep, w);
}

} // namespace annular
