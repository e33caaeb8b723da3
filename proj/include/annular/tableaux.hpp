#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "annular/partition.hpp"
#include "annular/roots.hpp"

namespace annular {

// Addable/removable boxes of lambda under the row cap of the root system
// (n rows in B/C/D, n+1 in type A).  Lists ordered by row index.
struct AddRemove {
    std::vector<Box> addable;
    std::vector<Box> removable;
};

inline AddRemove addable_removable(const Partition& p, const RootSystem& rs) {
    require_integral(p, rs);
    AddRemove out;
    int cap = rs.max_rows();
    for (int r = 1; r <= std::min(p.length() + 1, cap); ++r) {
        int cur = p.row(r - 1);
        int above = r == 1 ? INT32_MAX : p.row(r - 2);
        if (cur + 1 <= above) out.addable.push_back({r, cur + 1});
    }
    for (int r = 1; r <= p.length(); ++r) {
        int cur = p.rows()[r - 1];
        int below = p.row(r);
        if (cur >= 1 && cur - 1 >= below) out.removable.push_back({r, cur});
    }
    return out;
}

// Highest weights of L(lambda) (x) L(omega_1) per the one-box branching rule:
// additions only in type A; additions and removals in C/D and in B with
// lambda_n = 0; additionally lambda itself in type B with lambda_n > 0.
inline std::vector<Partition> decompose_fundamental_tensor(const Partition& p,
                                                           const RootSystem& rs) {
    require_integral(p, rs);
    auto ar = addable_removable(p, rs);
    std::vector<Partition> out;
    for (const Box& b : ar.addable) out.push_back(p.with_box_added(b));
    if (rs.type == LieType::A) return out;
    for (const Box& b : ar.removable) out.push_back(p.with_box_removed(b));
    if (rs.type == LieType::B && p.length() == rs.n) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// standard tableaux

class StandardTableau {
  public:
    StandardTableau(SkewShape shape, std::vector<Box> box_of_entry)
        : shape_(std::move(shape)), box_of_(std::move(box_of_entry)) {}

    const SkewShape& shape() const { return shape_; }
    int size() const { return (int)box_of_.size(); }
    // box containing i (1-based)
    const Box& box_of(int i) const { return box_of_.at(i - 1); }
    int entry(const Box& b) const {
        for (int i = 0; i < size(); ++i)
            if (box_of_[i] == b) return i + 1;
        throw std::invalid_argument("box not in tableau");
    }

    // entries read row by row, left to right
    std::vector<int> reading_word() const {
        std::vector<Box> bs;
        for (int i = 0; i < size(); ++i) bs.push_back(box_of_[i]);
        std::sort(bs.begin(), bs.end());
        std::vector<int> out;
        for (const Box& b : bs) out.push_back(entry(b));
        return out;
    }

    bool is_standard() const {
        for (int i = 1; i <= size(); ++i) {
            const Box& b = box_of(i);
            if (!shape_.has_box(b)) return false;
            Box left{b.row, b.col - 1}, up{b.row - 1, b.col};
            if (shape_.has_box(left) && entry(left) > i) return false;
            if (shape_.has_box(up) && entry(up) > i) return false;
        }
        return true;
    }

    // swap entries i, i+1; caller checks standardness of the result
    StandardTableau with_swapped(int i) const {
        std::vector<Box> bo = box_of_;
        std::swap(bo[i - 1], bo[i]);
        return StandardTableau(shape_, std::move(bo));
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.shape_ == b.shape_ && a.box_of_ == b.box_of_;
    }

  private:
    SkewShape shape_;
    std::vector<Box> box_of_; // box_of_[i] holds entry i+1
};

// All standard fillings, ordered lexicographically by reading word.
inline std::vector<StandardTableau> enumerate_standard_tableaux(const SkewShape& shape) {
    std::vector<Box> boxes = shape.boxes();
    int k = (int)boxes.size();
    std::vector<StandardTableau> out;
    std::vector<Box> cur;
    std::vector<bool> used(boxes.size(), false);
    auto placeable = [&](size_t bi) {
        const Box& b = boxes[bi];
        for (size_t j = 0; j < boxes.size(); ++j) {
            if (used[j]) continue;
            if (boxes[j].row == b.row && boxes[j].col == b.col - 1) return false;
            if (boxes[j].col == b.col && boxes[j].row == b.row - 1) return false;
        }
        return true;
    };
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == k) {
            out.emplace_back(shape, cur);
            return;
        }
        for (size_t bi = 0; bi < boxes.size(); ++bi) {
            if (used[bi] || !placeable(bi)) continue;
            used[bi] = true;
            cur.push_back(boxes[bi]);
            rec();
            cur.pop_back();
            used[bi] = false;
        }
    };
    rec();
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

// ---------------------------------------------------------------------------
// up-down tableaux

struct UpDownTableau {
    std::vector<Partition> steps; // tau^(0) .. tau^(k)
    RootSystem rs;
    int length() const { return (int)steps.size() - 1; }
    friend bool operator==(const UpDownTableau& a, const UpDownTableau& b) {
        return a.steps == b.steps && a.rs == b.rs;
    }
};

// one-step neighbors for up-down paths (B allows the full-length stay-step)
inline std::vector<Partition> updown_neighbors(const Partition& p, const RootSystem& rs) {
    std::vector<Partition> out;
    auto ar = addable_removable(p, rs);
    for (const Box& b : ar.addable) out.push_back(p.with_box_added(b));
    if (rs.type != LieType::A) {
        for (const Box& b : ar.removable) out.push_back(p.with_box_removed(b));
        if (rs.type == LieType::B && p.length() == rs.n) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<UpDownTableau> enumerate_updown_tableaux(const Partition& mu,
                                                            const Partition& lambda, int k,
                                                            const RootSystem& rs) {
    require_integral(mu, rs);
    require_integral(lambda, rs);
    std::vector<UpDownTableau> out;
    std::vector<Partition> cur{mu};
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == k + 1) {
            if (cur.back() == lambda) out.push_back({cur, rs});
            return;
        }
        for (const Partition& nb : updown_neighbors(cur.back(), rs)) {
            cur.push_back(nb);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end(), [](const UpDownTableau& a, const UpDownTableau& b) {
        return a.steps < b.steps;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Jacobi-Trudi count check

// lhs = #SYT(lambda/nu); rhs = sum over w in S_m of sign(w) multinomial(k;
// lambda+delta-w(nu+delta)), delta = (m-1,...,1,0).
inline std::pair<long long, long long> jacobi_trudi_check(const Partition& lambda,
                                                          const Partition& nu, int k) {
    if (!lambda.contains(nu) || lambda.size() - nu.size() != k)
        throw std::invalid_argument("jacobi_trudi_check: need nu <= lambda, k = |lambda/nu|");
    long long lhs = (long long)enumerate_standard_tableaux(SkewShape(lambda, nu)).size();

    int m = std::max(lambda.length(), nu.length());
    if (m == 0) return {1, 1};
    std::vector<long long> fact(k + 1, 1);
    for (int i = 1; i <= k; ++i) fact[i] = fact[i - 1] * i;

    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    long long rhs = 0;
    do {
        int sgn = 1;
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
                if (len % 2 == 0) sgn = -sgn;
            }
        }
        bool ok = true;
        long long multinom = fact[k];
        int total = 0;
        for (int i = 0; i < m && ok; ++i) {
            int a = lambda.row(i) + (m - 1 - i) - (nu.row(perm[i]) + (m - 1 - perm[i]));
            if (a < 0) {
                ok = false;
                break;
            }
            total += a;
            multinom /= fact[a];
        }
        if (ok && total == k) rhs += sgn * multinom;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {lhs, rhs};
}

} // namespace annular
