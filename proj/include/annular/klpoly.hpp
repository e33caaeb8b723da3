#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace annular {

// Permutation in one-line notation on {1..m}.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> v) : images(std::move(v)) { validate(); }
    static Permutation identity(int m) {
        std::vector<int> v(m);
        for (int i = 0; i < m; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }
    // "3412" or "[3,4,1,2]"
    static Permutation parse(const std::string& s) {
        std::vector<int> v;
        if (s.find(',') != std::string::npos || s.find('[') != std::string::npos) {
            std::string body = s;
            body.erase(std::remove(body.begin(), body.end(), '['), body.end());
            body.erase(std::remove(body.begin(), body.end(), ']'), body.end());
            size_t pos = 0;
            while (pos < body.size()) {
                size_t comma = body.find(',', pos);
                if (comma == std::string::npos) comma = body.size();
                v.push_back(std::stoi(body.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        } else {
            for (char c : s) {
                if (c < '1' || c > '9') throw std::invalid_argument("digit permutation syntax");
                v.push_back(c - '0');
            }
        }
        return Permutation(std::move(v));
    }

    int size() const { return (int)images.size(); }
    int operator()(int i) const { return images.at(i - 1); }

    int length() const {
        int l = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (images[i] > images[j]) ++l;
        return l;
    }

    Permutation inverse() const {
        std::vector<int> v(size());
        for (int i = 1; i <= size(); ++i) v[images[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }

    // s_i * w  (swap the values i, i+1)
    Permutation left_mult_s(int i) const {
        std::vector<int> v = images;
        for (int& x : v)
            if (x == i)
                x = i + 1;
            else if (x == i + 1)
                x = i;
        return Permutation(std::move(v));
    }
    // w * s_i  (swap positions i, i+1)
    Permutation right_mult_s(int i) const {
        std::vector<int> v = images;
        std::swap(v[i - 1], v[i]);
        return Permutation(std::move(v));
    }

    // (this * o)(i) = this(o(i))
    Permutation compose(const Permutation& o) const {
        if (size() != o.size()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> v(size());
        for (int i = 1; i <= size(); ++i) v[i - 1] = images[o(i) - 1];
        return Permutation(std::move(v));
    }

    std::string str() const {
        std::string out;
        bool wide = size() > 9;
        for (int i = 0; i < size(); ++i) {
            if (wide && i) out += ",";
            out += std::to_string(images[i]);
        }
        return wide ? "[" + out + "]" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    void validate() const {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > (int)images.size() || seen[v - 1])
                throw std::invalid_argument("not a permutation");
            seen[v - 1] = true;
        }
    }
};

// subword/dominance criterion for the Bruhat order
inline bool bruhat_leq(const Permutation& x, const Permutation& w) {
    if (x.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
    int m = x.size();
    for (int i = 1; i < m; ++i) {
        std::vector<int> xs(x.images.begin(), x.images.begin() + i);
        std::vector<int> ws(w.images.begin(), w.images.begin() + i);
        std::sort(xs.begin(), xs.end(), std::greater<>());
        std::sort(ws.begin(), ws.end(), std::greater<>());
        for (int j = 0; j < i; ++j)
            if (xs[j] > ws[j]) return false;
    }
    return true;
}

// Polynomial in v with integer coefficients.
class KLPolynomial {
  public:
    KLPolynomial() = default;
    KLPolynomial(long c) {
        if (c) coeffs_[0] = c;
    }

    static KLPolynomial monomial(long c, int e) {
        KLPolynomial p;
        if (c) p.coeffs_[e] = c;
        return p;
    }

    const std::map<int, long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? 0 : it->second;
    }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    KLPolynomial& operator+=(const KLPolynomial& o) {
        for (auto [e, c] : o.coeffs_) add(e, c);
        return *this;
    }
    KLPolynomial& operator-=(const KLPolynomial& o) {
        for (auto [e, c] : o.coeffs_) add(e, -c);
        return *this;
    }
    friend KLPolynomial operator+(KLPolynomial a, const KLPolynomial& b) { return a += b; }
    friend KLPolynomial operator-(KLPolynomial a, const KLPolynomial& b) { return a -= b; }
    friend KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b) {
        KLPolynomial r;
        for (auto [e1, c1] : a.coeffs_)
            for (auto [e2, c2] : b.coeffs_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    KLPolynomial shifted(int s) const {
        KLPolynomial r;
        for (auto [e, c] : coeffs_) r.coeffs_[e + s] = c;
        return r;
    }
    friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto [e, c] : coeffs_) {
            if (!out.empty()) out += c >= 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            long a = c < 0 ? -c : c;
            std::string term;
            if (a != 1 || e == 0) term += std::to_string(a);
            if (e == 1) term += "v";
            if (e > 1) term += "v^" + std::to_string(e);
            out += term;
        }
        return out;
    }

  private:
    void add(int e, long c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c) coeffs_[e] = c;
        } else {
            it->second += c;
            if (!it->second) coeffs_.erase(it);
        }
    }
    std::map<int, long> coeffs_;
};

// Memoized Kazhdan-Lusztig recursion for a fixed symmetric group.  Cache keyed
// per size, shared across calls.  Feasible through S_8 for single pairs; the
// test suites exercise S_5 exhaustively.
class KLContext {
  public:
    explicit KLContext(int m) : m_(m) {}

    KLPolynomial polynomial(const Permutation& x, const Permutation& w) {
        if (x.size() != m_ || w.size() != m_)
            throw std::invalid_argument("permutation size mismatch");
        if (!bruhat_leq(x, w)) return KLPolynomial();
        return compute(x, w);
    }

  private:
    KLPolynomial compute(const Permutation& x, const Permutation& w) {
        if (x == w) return KLPolynomial(1);
        auto key = std::make_pair(x.images, w.images);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (!bruhat_leq(x, w)) return memo_[key] = KLPolynomial();

        int s = 0; // left descent of w
        for (int i = 1; i < m_; ++i)
            if (w.left_mult_s(i).length() < w.length()) {
                s = i;
                break;
            }
        Permutation sw = w.left_mult_s(s);
        Permutation sx = x.left_mult_s(s);
        int c = sx.length() < x.length() ? 1 : 0;
        KLPolynomial base =
            compute_leq(sx, sw).shifted(1 - c) + compute_leq(x, sw).shifted(c);
        // mu-correction over z with sz < z, x <= z < sw
        KLPolynomial corr;
        int lw = w.length();
        collect_interval(x, sw, [&](const Permutation& z) {
            if (z.left_mult_s(s).length() >= z.length()) return;
            KLPolynomial pzsw = compute_leq(z, sw);
            int lz = z.length();
            int deg = (sw.length() - lz - 1);
            if (deg < 0 || deg % 2 != 0) return;
            long mu = pzsw.coeff(deg / 2);
            if (!mu) return;
            corr += KLPolynomial::monomial(mu, (lw - lz) / 2) * compute_leq(x, z);
        });
        KLPolynomial res = base - corr;
        return memo_[key] = res;
    }

    KLPolynomial compute_leq(const Permutation& x, const Permutation& w) {
        if (!bruhat_leq(x, w)) return KLPolynomial();
        return compute(x, w);
    }

    template <typename F>
    void collect_interval(const Permutation& x, const Permutation& w, F&& fn) {
        // walk [x, w] by BFS downward from w through covers
        std::vector<Permutation> stack{w};
        std::map<std::vector<int>, bool> seen;
        seen[w.images] = true;
        while (!stack.empty()) {
            Permutation z = stack.back();
            stack.pop_back();
            if (z != w) fn(z);
            // covers of z from below: z * t_{ij} with length - 1
            for (int i = 1; i <= m_; ++i)
                for (int j = i + 1; j <= m_; ++j) {
                    if (z(i) <= z(j)) continue;
                    Permutation y = z;
                    std::swap(y.images[i - 1], y.images[j - 1]);
                    if (y.length() != z.length() - 1) continue;
                    if (seen.count(y.images) || !bruhat_leq(x, y)) continue;
                    seen[y.images] = true;
                    stack.push_back(y);
                }
        }
    }

    int m_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, KLPolynomial> memo_;
};

inline KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
    KLContext ctx(x.size());
    return ctx.polynomial(x, w);
}

} // namespace annular
