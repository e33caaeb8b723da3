#pragma once

#include <stdexcept>
#include <vector>

namespace annular {

// Dense square-or-rectangular matrix over an exact field or Real.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix out(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& v = a(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < b.c_; ++j) {
                    if (is_zero(b(k, j))) continue;
                    out(i, j) += v * b(k, j);
                }
            }
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& v : m.a_) v = s * v;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    T trace() const {
        T t(0);
        for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    bool all_zero() const {
        for (const T& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    // Gauss-Jordan inverse (T must be a field)
    Matrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
        Matrix m = *this, inv = identity(r_);
        for (int col = 0; col < c_; ++col) {
            int piv = -1;
            for (int i = col; i < r_; ++i)
                if (!is_zero(m(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::domain_error("matrix is singular");
            if (piv != col) {
                for (int j = 0; j < c_; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            T d = m(col, col);
            for (int j = 0; j < c_; ++j) {
                m(col, j) = m(col, j) / d;
                inv(col, j) = inv(col, j) / d;
            }
            for (int i = 0; i < r_; ++i) {
                if (i == col || is_zero(m(i, col))) continue;
                T f = m(i, col);
                for (int j = 0; j < c_; ++j) {
                    m(i, j) -= f * m(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

  private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            throw std::invalid_argument("matrix dimension mismatch");
    }

    template <typename U>
    static bool is_zero(const U& v) {
        if constexpr (requires { v.is_zero(); })
            return v.is_zero();
        else
            return v == U(0);
    }

    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

} // namespace annular
