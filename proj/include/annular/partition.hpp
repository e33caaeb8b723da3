#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace annular {

struct Box {
    int row = 1; // 1-based
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

// content = diagonal number
inline int content(const Box& b) { return b.col - b.row; }

// Weakly decreasing non-negative rows, trailing zeros trimmed.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> rows) : rows_(rows) { normalize(); }
    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) { normalize(); }

    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const { return i >= 0 && i < (int)rows_.size() ? rows_[i] : 0; }
    int length() const { return (int)rows_.size(); }
    int size() const {
        int s = 0;
        for (int r : rows_) s += r;
        return s;
    }
    bool empty() const { return rows_.empty(); }

    bool contains(const Partition& inner) const {
        for (int i = 0; i < inner.length(); ++i)
            if (inner.rows_[i] > row(i)) return false;
        return true;
    }

    bool has_box(const Box& b) const {
        return b.row >= 1 && b.col >= 1 && b.col <= row(b.row - 1);
    }

    std::vector<Box> boxes() const {
        std::vector<Box> out;
        for (int i = 0; i < length(); ++i)
            for (int j = 1; j <= rows_[i]; ++j) out.push_back({i + 1, j});
        return out;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (!rows_.empty()) {
            c.resize(rows_[0]);
            for (int j = 0; j < rows_[0]; ++j)
                c[j] = (int)std::count_if(rows_.begin(), rows_.end(),
                                          [&](int r) { return r > j; });
        }
        return Partition(std::move(c));
    }

    Partition with_box_added(const Box& b) const {
        std::vector<int> r = rows_;
        if (b.row > (int)r.size()) r.resize(b.row, 0);
        if (r[b.row - 1] + 1 != b.col) throw std::invalid_argument("box not addable");
        r[b.row - 1] += 1;
        Partition p(std::move(r));
        if (!is_valid(p.rows_)) throw std::invalid_argument("box addition breaks shape");
        return p;
    }

    Partition with_box_removed(const Box& b) const {
        std::vector<int> r = rows_;
        if (b.row > (int)r.size() || r[b.row - 1] != b.col)
            throw std::invalid_argument("box not removable");
        r[b.row - 1] -= 1;
        Partition p(std::move(r));
        if (!is_valid(p.rows_)) throw std::invalid_argument("box removal breaks shape");
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    // [7,7,7,5,5]
    std::string str() const {
        std::string out = "[";
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(rows_[i]);
        }
        return out + "]";
    }

    static Partition parse(const std::string& s) {
        size_t a = s.find('['), b = s.rfind(']');
        if (a == std::string::npos || b == std::string::npos || b < a)
            throw std::invalid_argument("partition syntax: [r1,r2,...]");
        std::vector<int> rows;
        std::string body = s.substr(a + 1, b - a - 1);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            std::string tok = body.substr(pos, comma - pos);
            if (!tok.empty()) rows.push_back(std::stoi(tok));
            pos = comma + 1;
        }
        if (!is_valid_weak(rows)) throw std::invalid_argument("rows must be weakly decreasing >= 0");
        return Partition(std::move(rows));
    }

  private:
    static bool is_valid(const std::vector<int>& r) { return is_valid_weak(r); }
    static bool is_valid_weak(const std::vector<int>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0) return false;
            if (i && r[i] > r[i - 1]) return false;
        }
        return true;
    }
    void normalize() {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        if (!is_valid_weak(rows_))
            throw std::invalid_argument("rows must be weakly decreasing >= 0");
    }

    std::vector<int> rows_;
};

struct SkewShape {
    Partition outer, inner;
    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner)) throw std::invalid_argument("inner not contained in outer");
    }
    int size() const { return outer.size() - inner.size(); }
    bool has_box(const Box& b) const { return outer.has_box(b) && !inner.has_box(b); }
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        for (const Box& b : outer.boxes())
            if (!inner.has_box(b)) out.push_back(b);
        return out;
    }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    std::string str() const { return outer.str() + "/" + inner.str(); }
};

// h(b) = lambda_i - i + lambda'_j - j + 1
inline std::map<Box, int> hook_lengths(const Partition& p) {
    std::map<Box, int> out;
    Partition c = p.conjugate();
    for (const Box& b : p.boxes())
        out[b] = p.rows()[b.row - 1] - b.row + c.rows()[b.col - 1] - b.col + 1;
    return out;
}

} // namespace annular
