#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Direction coefficient r = c + m*d with c >= 0, m >= 0, not both zero.
struct Direction {
    Rational c;
    Rational m;

    Direction(Rational c_, Rational m_);
    static Direction constant(Rational c_) { return Direction(std::move(c_), Rational(0)); }

    Direction operator+(const Direction& o) const { return Direction(c + o.c, m + o.m); }

    friend bool operator==(const Direction& a, const Direction& b) {
        return a.c == b.c && a.m == b.m;
    }
    friend bool operator<(const Direction& a, const Direction& b) {
        if (a.c != b.c) return a.c < b.c;
        return a.m < b.m;
    }

    std::string str() const;
};

// Generator (s | r): integer exponent with its direction.  The semigroup
// product adds both components.
struct Letter {
    long long s;
    Direction dir;

    Letter operator*(const Letter& o) const { return Letter{s + o.s, dir + o.dir}; }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.s == b.s && a.dir == b.dir;
    }
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.dir < b.dir;
    }
};

// Finite word of letters; the empty word is the algebra unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t depth() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    long long weight() const;

    const Letter& letter(std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t i) const;
    Word without_first() const { return suffix_from(1); }
    Word prepended(const Letter& l) const;

    std::vector<long long> exponents() const;

    bool all_nonpositive() const;
    bool all_positive() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator<(const Word& a, const Word& b) {
        return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                            b.letters_.begin(), b.letters_.end());
    }

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

// Finite Rational-linear combination of words, in canonical order with no
// zero coefficients.
class HopfElement {
public:
    HopfElement() = default;
    explicit HopfElement(const Word& w) { add_term(w, Rational(1)); }

    static HopfElement unit() { return HopfElement(Word()); }

    void add_term(const Word& w, const Rational& coeff);

    const std::map<Word, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    HopfElement& operator+=(const HopfElement& o);
    friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
    HopfElement operator-() const;
    friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a += -b; }
    HopfElement scaled(const Rational& c) const;

    friend bool operator==(const HopfElement& a, const HopfElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

// Quasi-shuffle product: interleavings of a and b where any set of
// adjacent pairs (one letter from each side) may merge under the letter
// semigroup.  Recursive form:
//   a * b = a_1 (a' * b) + b_1 (a * b') + (a_1 b_1) (a' * b').
HopfElement quasi_shuffle(const Word& a, const Word& b);
HopfElement quasi_shuffle(const HopfElement& a, const HopfElement& b);

// All splits (prefix, suffix) of w, including the two trivial ones;
// returns depth+1 pairs.
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

// Independent quasi-shuffle evaluation: enumerates the surjection data
// (r, alpha, beta) -- a target length r and a pair of order-preserving
// injections [k] -> [r], [l] -> [r] whose images cover [r] -- and builds
// each merged word directly.  Combined depth at most 12.
HopfElement stuffle_oracle(const Word& a, const Word& b);

// Maximal runs of zero entries of s (1-based indices) and the order of
// the product of symmetric groups permuting within each run.
struct ZeroClusters {
    std::vector<std::vector<int>> blocks;
    Integer order;
};
ZeroClusters symmetrization_group(const std::vector<long long>& s);

// Symmetrized product identity: with S_k acting on the letters of a,
//   (sum over sigma of sigma(a)) * (b) =
//   sum over S_{k+1} of permutations of (a, b)
//   + sum over i of sum over S_k of sigma(a) with b merged into slot i.
// Depth of a at most 5.
bool hoffman_identity_check(const std::vector<Letter>& a, const Letter& b);

} // namespace mzv
