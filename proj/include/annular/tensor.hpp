#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/braid.hpp"
#include "annular/hecke.hpp"
#include "annular/matrix.hpp"
#include "annular/ratfunc.hpp"
#include "annular/tableaux.hpp"

namespace annular {

// Basis of a weight space of V^{otimes k} for type A_n: all sequences over
// {1..n+1} with the multiset prescribed by counts, in lexicographic order.
inline std::vector<std::vector<int>> weight_space(int k, int n,
                                                  const std::vector<int>& counts) {
    if ((int)counts.size() > n + 1)
        throw std::invalid_argument("weight has too many coordinates");
    std::vector<int> letters;
    int total = 0;
    for (size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] < 0) return {};
        total += counts[a];
        letters.insert(letters.end(), counts[a], (int)a + 1);
    }
    if (total != k) return {};
    std::vector<std::vector<int>> out;
    std::sort(letters.begin(), letters.end());
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

namespace detail {

// apply the printed 3-case R-matrix on tensor slots i, i+1 to a basis vector,
// returning the image as (basis index, coefficient) pairs within the same
// weight space
template <typename Fn>
void rmatrix_apply(const std::vector<int>& seq, int i, bool inverse, Fn&& emit) {
    RatFunc q = RatFunc::q(1), qm = RatFunc::q(1) - RatFunc::q(-1);
    int a = seq[i - 1], b = seq[i];
    std::vector<int> sw = seq;
    std::swap(sw[i - 1], sw[i]);
    if (!inverse) {
        if (a == b) {
            emit(seq, q);
        } else if (a > b) {
            emit(sw, RatFunc(1));
        } else {
            emit(seq, qm);
            emit(sw, RatFunc(1));
        }
    } else {
        if (a == b) {
            emit(seq, RatFunc::q(-1));
        } else if (a < b) {
            emit(sw, RatFunc(1));
        } else {
            emit(seq, RatFunc(0) - qm);
            emit(sw, RatFunc(1));
        }
    }
}

} // namespace detail

// Matrix of R_i (identity elsewhere) on the given weight-space basis.
inline Matrix<RatFunc> rmatrix_action(int i, const std::vector<std::vector<int>>& basis,
                                      bool inverse = false) {
    if (basis.empty()) return Matrix<RatFunc>(0, 0);
    int k = (int)basis[0].size();
    if (i < 1 || i > k - 1) throw std::invalid_argument("rmatrix_action: index out of range");
    std::map<std::vector<int>, int> index;
    for (size_t j = 0; j < basis.size(); ++j) index[basis[j]] = (int)j;
    Matrix<RatFunc> m((int)basis.size(), (int)basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        detail::rmatrix_apply(basis[j], i, inverse,
                              [&](const std::vector<int>& img, const RatFunc& c) {
                                  m(index.at(img), (int)j) += c;
                              });
    return m;
}

// Quantum raising operator (Chevalley generator) acting on V^{otimes k}: slot
// j is raised i+1 -> i and the slots to its right contribute K^{-1}-weights
// q^{-(delta_{a,i} - delta_{a,i+1})}.  The sign of the K-exponent is the one
// that leaves highest-weight kernels invariant under the R action.
inline Matrix<RatFunc> raising_action(int i, const std::vector<std::vector<int>>& from_basis,
                                      const std::vector<std::vector<int>>& to_basis) {
    std::map<std::vector<int>, int> index;
    for (size_t j = 0; j < to_basis.size(); ++j) index[to_basis[j]] = (int)j;
    Matrix<RatFunc> m((int)to_basis.size(), (int)from_basis.size());
    for (size_t col = 0; col < from_basis.size(); ++col) {
        const std::vector<int>& seq = from_basis[col];
        for (size_t j = 0; j < seq.size(); ++j) {
            if (seq[j] != i + 1) continue;
            long e = 0;
            for (size_t l = j + 1; l < seq.size(); ++l) {
                if (seq[l] == i) e -= 1;
                if (seq[l] == i + 1) e += 1;
            }
            std::vector<int> img = seq;
            img[j] = i;
            m(index.at(img), (int)col) += RatFunc::q(e);
        }
    }
    return m;
}

namespace detail {

// column-space kernel of an exact matrix, as columns of the returned matrix
inline Matrix<RatFunc> kernel_basis(Matrix<RatFunc> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        RatFunc d = m(r, c);
        for (int j = 0; j < cols; ++j) m(r, j) = m(r, j) / d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            RatFunc f = m(i, c);
            for (int j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
            free_cols.push_back(c);
    Matrix<RatFunc> ker(cols, (int)free_cols.size());
    for (size_t f = 0; f < free_cols.size(); ++f) {
        ker(free_cols[f], (int)f) = RatFunc(1);
        for (size_t p = 0; p < pivot_col.size(); ++p)
            ker(pivot_col[p], (int)f) = RatFunc(0) - m((int)p, free_cols[f]);
    }
    return ker;
}

// solve A X = B for full-column-rank A (exact)
inline Matrix<RatFunc> solve_columns(Matrix<RatFunc> a, Matrix<RatFunc> b) {
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    std::vector<int> pivot_row(cols, -1);
    for (int c = 0; c < cols; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("solve_columns: matrix not full column rank");
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b(piv, j), b(r, j));
        }
        RatFunc d = a(r, c);
        for (int j = 0; j < cols; ++j) a(r, j) = a(r, j) / d;
        for (int j = 0; j < b.cols(); ++j) b(r, j) = b(r, j) / d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            RatFunc f = a(i, c);
            for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
            for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(r, j);
        }
        pivot_row[c] = r;
        ++r;
    }
    // consistency: rows below rank must vanish in b
    for (int i = r; i < rows; ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!b(i, j).is_zero())
                throw std::domain_error("solve_columns: inconsistent system");
    Matrix<RatFunc> x(cols, b.cols());
    for (int c = 0; c < cols; ++c)
        for (int j = 0; j < b.cols(); ++j) x(c, j) = b(pivot_row[c], j);
    return x;
}

} // namespace detail

struct RaisingKernel {
    std::vector<std::vector<int>> basis; // ambient weight-space basis
    Matrix<RatFunc> kernel;              // columns = kernel vectors
    int dim() const { return kernel.cols(); }
};

// Prop 4.3e: { v in (V^{otimes k})_{lambda-mu} : E_i^{<mu+rho, alpha_i^vee>} v = 0 }.
inline RaisingKernel raising_kernel(int k, int n, const Partition& mu,
                                    const Partition& lambda) {
    std::vector<int> counts(n + 1, 0);
    for (int a = 0; a < n + 1; ++a) counts[a] = lambda.row(a) - mu.row(a);
    RaisingKernel out;
    out.basis = weight_space(k, n, counts);
    if (out.basis.empty()) {
        out.kernel = Matrix<RatFunc>(0, 0);
        return out;
    }
    int dim = (int)out.basis.size();
    std::vector<Matrix<RatFunc>> blocks;
    int total_rows = 0;
    for (int i = 1; i <= n; ++i) {
        int power = mu.row(i - 1) - mu.row(i) + 1; // <mu+rho, alpha_i^vee>
        std::vector<int> cur = counts;
        auto cur_basis = out.basis;
        Matrix<RatFunc> op = Matrix<RatFunc>::identity(dim);
        bool dead = false;
        for (int p = 0; p < power; ++p) {
            std::vector<int> nxt = cur;
            nxt[i - 1] += 1;
            nxt[i] -= 1;
            if (nxt[i] < 0) {
                dead = true; // operator power is identically zero: no constraint
                break;
            }
            auto nxt_basis = weight_space(k, n, nxt);
            op = raising_action(i, cur_basis, nxt_basis) * op;
            cur = nxt;
            cur_basis = std::move(nxt_basis);
        }
        if (dead) continue;
        blocks.push_back(op);
        total_rows += op.rows();
    }
    Matrix<RatFunc> stacked(std::max(total_rows, 1), dim);
    int row = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < dim; ++j) stacked(row + i, j) = b(i, j);
        row += b.rows();
    }
    out.kernel = detail::kernel_basis(stacked);
    return out;
}

// Braid word acting on a fixed weight space (letters T_i only; X acts as the
// identity on L(0) (x) V^{otimes k}).
inline Matrix<RatFunc> tensor_word_matrix(const AffineBraidWord& w,
                                          const std::vector<std::vector<int>>& basis) {
    Matrix<RatFunc> acc = Matrix<RatFunc>::identity((int)basis.size());
    for (const BraidLetter& l : w.letters) {
        switch (l.kind) {
            case BraidLetter::Kind::T:
                acc = rmatrix_action(l.index, basis, false) * acc;
                break;
            case BraidLetter::Kind::Tinv:
                acc = rmatrix_action(l.index, basis, true) * acc;
                break;
            case BraidLetter::Kind::X:
            case BraidLetter::Kind::Xinv:
                break; // identity for mu = 0
            case BraidLetter::Kind::E:
                throw std::invalid_argument("tensor oracle has no E generators");
        }
    }
    return acc;
}

struct BraidActionCheck {
    RatFunc tensor_character;
    RatFunc seminormal_character;
    bool match = false;
};

// Prop 3.5 / Thm 6.17a oracle: the character of a T-word on the lambda
// highest-weight space of V^{otimes k} equals the seminormal character on
// lambda/0, exactly.
inline BraidActionCheck braid_action_check(int k, int n, const Partition& lambda,
                                           const AffineBraidWord& w) {
    for (const BraidLetter& l : w.letters)
        if (l.kind == BraidLetter::Kind::X || l.kind == BraidLetter::Kind::Xinv ||
            l.kind == BraidLetter::Kind::E)
            throw std::invalid_argument("braid_action_check: word must use T letters only");
    BraidActionCheck out;
    RaisingKernel hw = raising_kernel(k, n, Partition{}, lambda);
    if (hw.dim() == 0) {
        out.tensor_character = RatFunc(0);
    } else {
        Matrix<RatFunc> m = tensor_word_matrix(w, hw.basis);
        Matrix<RatFunc> restricted = detail::solve_columns(hw.kernel, m * hw.kernel);
        out.tensor_character = restricted.trace();
    }
    SeminormalRep rep(SkewShape(lambda, Partition{}));
    out.seminormal_character = matrix_of_word(rep, w).trace();
    out.match = out.tensor_character == out.seminormal_character;
    return out;
}

} // namespace annular
