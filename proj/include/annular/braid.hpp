#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/matrix.hpp"

namespace annular {

// Letters of the affine braid group / affine BMW monoid on k strands:
// T_i, T_i^-1 (1 <= i <= k-1), X = X^{eps_1}, X^-1, and E_i (BMW only).
struct BraidLetter {
    enum class Kind { T, Tinv, X, Xinv, E };
    Kind kind = Kind::X;
    int index = 0; // generator index for T/E
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct AffineBraidWord {
    std::vector<BraidLetter> letters;
    int strands = 1;

    bool has_e_letters() const {
        for (const auto& l : letters)
            if (l.kind == BraidLetter::Kind::E) return true;
        return false;
    }

    void validate() const {
        for (const auto& l : letters) {
            bool indexed =
                l.kind == BraidLetter::Kind::T || l.kind == BraidLetter::Kind::Tinv ||
                l.kind == BraidLetter::Kind::E;
            if (indexed && (l.index < 1 || l.index > strands - 1))
                throw std::invalid_argument("generator index out of range for strand count");
        }
    }

    AffineBraidWord& append(const AffineBraidWord& o) {
        letters.insert(letters.end(), o.letters.begin(), o.letters.end());
        return *this;
    }

    AffineBraidWord inverse() const {
        AffineBraidWord w;
        w.strands = strands;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            BraidLetter l = *it;
            switch (l.kind) {
                case BraidLetter::Kind::T: l.kind = BraidLetter::Kind::Tinv; break;
                case BraidLetter::Kind::Tinv: l.kind = BraidLetter::Kind::T; break;
                case BraidLetter::Kind::X: l.kind = BraidLetter::Kind::Xinv; break;
                case BraidLetter::Kind::Xinv: l.kind = BraidLetter::Kind::X; break;
                case BraidLetter::Kind::E:
                    throw std::invalid_argument("E letters are not invertible");
            }
            w.letters.push_back(l);
        }
        return w;
    }

    std::string str() const {
        std::string out;
        for (const auto& l : letters) {
            if (!out.empty()) out += " ";
            switch (l.kind) {
                case BraidLetter::Kind::T: out += "T" + std::to_string(l.index); break;
                case BraidLetter::Kind::Tinv: out += "T" + std::to_string(l.index) + "^-1"; break;
                case BraidLetter::Kind::X: out += "X"; break;
                case BraidLetter::Kind::Xinv: out += "X^-1"; break;
                case BraidLetter::Kind::E: out += "E" + std::to_string(l.index); break;
            }
        }
        return out;
    }
};

// X^{eps_i} = T_{i-1} ... T_1 X T_1 ... T_{i-1}   (3.3)
inline AffineBraidWord expand_xi(int i, int k) {
    if (i < 1 || i > k) throw std::invalid_argument("expand_xi: need 1 <= i <= k");
    AffineBraidWord w;
    w.strands = k;
    for (int j = i - 1; j >= 1; --j) w.letters.push_back({BraidLetter::Kind::T, j});
    w.letters.push_back({BraidLetter::Kind::X, 0});
    for (int j = 1; j <= i - 1; ++j) w.letters.push_back({BraidLetter::Kind::T, j});
    return w;
}

// The stability element of Markov axiom (5) on k+1 strands:
// X~^{eps_{k+1}} = T_k ... T_1 X T_1^-1 ... T_k^-1  (inverse conjugators).
inline AffineBraidWord expand_xi_tilde(int k) {
    AffineBraidWord w;
    w.strands = k + 1;
    for (int j = k; j >= 1; --j) w.letters.push_back({BraidLetter::Kind::T, j});
    w.letters.push_back({BraidLetter::Kind::X, 0});
    for (int j = 1; j <= k; ++j) w.letters.push_back({BraidLetter::Kind::Tinv, j});
    return w;
}

// Ordered product of generator matrices; the leftmost letter acts first on
// column vectors.
template <typename Rep, typename Scalar>
Matrix<Scalar> matrix_of_word_impl(const Rep& rep, const AffineBraidWord& w) {
    if (w.strands != rep.strands())
        throw std::invalid_argument("strand count mismatch between word and representation");
    Matrix<Scalar> acc = Matrix<Scalar>::identity(rep.dim());
    for (const BraidLetter& l : w.letters) acc = rep.letter_matrix(l) * acc;
    return acc;
}

// Grammar: whitespace-separated tokens T<i>, T<i>^-1, X, X^-1, Xi<i>, E<i>.
inline AffineBraidWord parse_braid_word(const std::string& text, int strands) {
    AffineBraidWord w;
    w.strands = strands;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok == "X") {
            w.letters.push_back({inv ? BraidLetter::Kind::Xinv : BraidLetter::Kind::X, 0});
        } else if (tok.size() >= 2 && tok[0] == 'T') {
            int i = std::stoi(tok.substr(1));
            w.letters.push_back({inv ? BraidLetter::Kind::Tinv : BraidLetter::Kind::T, i});
        } else if (tok.size() >= 2 && tok[0] == 'E') {
            if (inv) throw std::invalid_argument("E letters are not invertible");
            int i = std::stoi(tok.substr(1));
            w.letters.push_back({BraidLetter::Kind::E, i});
        } else if (tok.size() >= 3 && tok.substr(0, 2) == "Xi") {
            AffineBraidWord xi = expand_xi(std::stoi(tok.substr(2)), strands);
            if (inv) xi = xi.inverse();
            w.append(xi);
        } else {
            throw std::invalid_argument("unknown braid token: " + tok);
        }
    }
    w.validate();
    return w;
}

} // namespace annular
