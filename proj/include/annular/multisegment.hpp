#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "annular/klpoly.hpp"

namespace annular {

// One row of boxes spanning the contents first..last; last = first-1 encodes
// an empty row.
struct Segment {
    int first = 0;
    int last = -1;
    int boxes() const { return last - first + 1; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Unordered collection of segments, stored in the pseudo-lexicographic
// canonical order: last weakly decreasing, first weakly increasing on ties.
class Multisegment {
  public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
        for (const Segment& s : segs_)
            if (s.last < s.first - 1)
                throw std::invalid_argument("segment violates last >= first - 1");
        canonicalize();
    }

    // Pair-of-weights labeling: row i spans contents mu_i + 1 .. lambda_i.
    // The worked example fixes the rho-free reading of the construction.
    static Multisegment from_weights(const std::vector<int>& lambda,
                                     const std::vector<int>& mu) {
        if (lambda.size() != mu.size())
            throw std::invalid_argument("weight length mismatch");
        std::vector<Segment> segs;
        for (size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] < mu[i])
                throw std::invalid_argument("condition (a): lambda_i - mu_i must be >= 0");
            segs.push_back({mu[i] + 1, lambda[i]});
        }
        return Multisegment(std::move(segs));
    }

    const std::vector<Segment>& segments() const { return segs_; }
    int box_count() const {
        int k = 0;
        for (const Segment& s : segs_) k += s.boxes();
        return k;
    }

    // contents of all boxes, weakly decreasing
    std::vector<int> content_list() const {
        std::vector<int> out;
        for (const Segment& s : segs_)
            for (int c = s.first; c <= s.last; ++c) out.push_back(c);
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    std::string str() const {
        std::string out;
        for (const Segment& s : segs_)
            out += "(" + std::to_string(s.first) + "," + std::to_string(s.last) + ")";
        return out;
    }

    // "(3,7)(3,7)(5,7)(1,5)(3,5)"
    static Multisegment parse(const std::string& text) {
        std::vector<Segment> segs;
        size_t pos = 0;
        while (pos < text.size()) {
            size_t open = text.find('(', pos);
            if (open == std::string::npos) break;
            size_t close = text.find(')', open);
            if (close == std::string::npos)
                throw std::invalid_argument("unbalanced segment parentheses");
            std::string body = text.substr(open + 1, close - open - 1);
            size_t comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("segment syntax: (first,last)");
            segs.push_back(
                {std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))});
            pos = close + 1;
        }
        return Multisegment(std::move(segs));
    }

    friend bool operator==(const Multisegment&, const Multisegment&) = default;

  private:
    void canonicalize() {
        std::sort(segs_.begin(), segs_.end(), [](const Segment& a, const Segment& b) {
            if (a.last != b.last) return a.last > b.last;
            return a.first < b.first;
        });
    }
    std::vector<Segment> segs_;
};

struct NormalForm {
    std::vector<int> nu;       // contents, weakly decreasing
    std::vector<int> nu_tilde; // nu - (1,...,1)
    Permutation w;             // second-ordering number -> first-ordering number
};

// The combinatorial normal form of a multisegment:
//   first ordering: ascending lex on (content of cyclic-left box, -content, -row),
//   second ordering: ascending lex on (content, -first number),
//   w(second number) = first number.  Locked against the worked golden triple.
inline NormalForm normal_form(const Multisegment& ms) {
    struct BoxRef {
        int row;
        int content;
    };
    std::vector<BoxRef> boxes;
    const auto& segs = ms.segments();
    for (size_t r = 0; r < segs.size(); ++r)
        for (int c = segs[r].first; c <= segs[r].last; ++c)
            boxes.push_back({(int)r + 1, c});
    int k = (int)boxes.size();

    auto left_content = [&](const BoxRef& b) {
        const Segment& s = segs[b.row - 1];
        return b.content > s.first ? b.content - 1 : s.last;
    };
    std::vector<int> order1(k);
    for (int i = 0; i < k; ++i) order1[i] = i;
    std::sort(order1.begin(), order1.end(), [&](int a, int b) {
        auto ta = std::make_tuple(left_content(boxes[a]), -boxes[a].content, -boxes[a].row);
        auto tb = std::make_tuple(left_content(boxes[b]), -boxes[b].content, -boxes[b].row);
        return ta < tb;
    });
    std::vector<int> first_no(k);
    for (int i = 0; i < k; ++i) first_no[order1[i]] = i + 1;

    std::vector<int> order2(k);
    for (int i = 0; i < k; ++i) order2[i] = i;
    std::sort(order2.begin(), order2.end(), [&](int a, int b) {
        auto ta = std::make_pair(boxes[a].content, -first_no[a]);
        auto tb = std::make_pair(boxes[b].content, -first_no[b]);
        return ta < tb;
    });

    NormalForm nf;
    std::vector<int> wimg(k);
    for (int i = 0; i < k; ++i) wimg[i] = first_no[order2[i]];
    nf.w = Permutation(std::move(wimg));
    nf.nu = ms.content_list();
    nf.nu_tilde = nf.nu;
    for (int& c : nf.nu_tilde) --c;
    return nf;
}

// Thm 6.31 decomposition number: 0 unless the content multisets agree, else
// the KL polynomial of the two normal-form permutations.
inline KLPolynomial decomposition_number(const Multisegment& standard_side,
                                         const Multisegment& simple_side) {
    if (standard_side.box_count() != simple_side.box_count())
        throw std::invalid_argument("multisegments must have the same box count");
    NormalForm a = normal_form(standard_side);
    NormalForm b = normal_form(simple_side);
    if (a.nu != b.nu) return KLPolynomial();
    return kl_polynomial(a.w, b.w);
}

} // namespace annular
