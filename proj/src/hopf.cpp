#include "mzv/hopf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

Direction::Direction(Rational c_, Rational m_) : c(std::move(c_)), m(std::move(m_)) {
    if (c.sign() < 0 || m.sign() < 0 || (c.is_zero() && m.is_zero())) {
        throw DomainError("direction must satisfy c >= 0, m >= 0, (c, m) != (0, 0)");
    }
}

std::string Direction::str() const {
    if (m.is_zero()) {
        return c.str();
    }
    std::string slope = m.is_one() ? "d" : m.str() + "*d";
    if (c.is_zero()) {
        return slope;
    }
    return c.str() + "+" + slope;
}

long long Word::weight() const {
    long long w = 0;
    for (const Letter& l : letters_) {
        w += l.s < 0 ? -l.s : l.s;
    }
    return w;
}

Word Word::prefix(std::size_t n) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix_from(std::size_t i) const {
    return Word(std::vector<Letter>(letters_.begin() + i, letters_.end()));
}

Word Word::prepended(const Letter& l) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + 1);
    out.push_back(l);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

std::vector<long long> Word::exponents() const {
    std::vector<long long> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) {
        out.push_back(l.s);
    }
    return out;
}

bool Word::all_nonpositive() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.s <= 0; });
}

bool Word::all_positive() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.s >= 1; });
}

std::string Word::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ",";
        os << letters_[i].s;
    }
    os << " | ";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ",";
        os << letters_[i].dir.str();
    }
    os << "]";
    return os.str();
}

void HopfElement::add_term(const Word& w, const Rational& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
    for (const auto& [w, c] : o.terms_) {
        add_term(w, c);
    }
    return *this;
}

HopfElement HopfElement::operator-() const {
    HopfElement r;
    for (const auto& [w, c] : terms_) {
        r.terms_.emplace(w, -c);
    }
    return r;
}

HopfElement HopfElement::scaled(const Rational& c) const {
    HopfElement r;
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [w, coeff] : terms_) {
        r.terms_.emplace(w, coeff * c);
    }
    return r;
}

std::string HopfElement::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational mag = c.abs();
        if (!mag.is_one()) {
            os << mag.str() << "*";
        }
        os << (w.empty() ? "1" : w.str());
    }
    return os.str();
}

namespace {

HopfElement prepend_all(const Letter& l, const HopfElement& e) {
    HopfElement r;
    for (const auto& [w, c] : e.terms()) {
        r.add_term(w.prepended(l), c);
    }
    return r;
}

} // namespace

HopfElement quasi_shuffle(const Word& a, const Word& b) {
    if (a.empty()) {
        return HopfElement(b);
    }
    if (b.empty()) {
        return HopfElement(a);
    }
    thread_local std::map<std::pair<Word, Word>, HopfElement> memo;
    const auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const Word at = a.without_first();
    const Word bt = b.without_first();
    HopfElement r = prepend_all(a.letter(0), quasi_shuffle(at, b));
    r += prepend_all(b.letter(0), quasi_shuffle(a, bt));
    r += prepend_all(a.letter(0) * b.letter(0), quasi_shuffle(at, bt));
    memo.emplace(key, r);
    return r;
}

HopfElement quasi_shuffle(const HopfElement& a, const HopfElement& b) {
    HopfElement r;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            r += quasi_shuffle(wa, wb).scaled(ca * cb);
        }
    }
    return r;
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.depth() + 1);
    for (std::size_t i = 0; i <= w.depth(); ++i) {
        out.emplace_back(w.prefix(i), w.suffix_from(i));
    }
    return out;
}

HopfElement stuffle_oracle(const Word& a, const Word& b) {
    const int k = static_cast<int>(a.depth());
    const int l = static_cast<int>(b.depth());
    if (k + l > 12) {
        throw DomainError("stuffle_oracle: combined depth exceeds 12");
    }
    if (k == 0) return HopfElement(b);
    if (l == 0) return HopfElement(a);

    HopfElement out;
    for (int r = std::max(k, l); r <= k + l; ++r) {
        const unsigned full = (1u << r) - 1u;
        // Images of the order-preserving injections are the popcount-k and
        // popcount-l subsets of [r]; the injections themselves are then
        // forced.  Covering means the two images union to all of [r].
        for (unsigned ia = 0; ia <= full; ++ia) {
            if (std::popcount(ia) != k) continue;
            const unsigned need = full & ~ia;
            for (unsigned ib = 0; ib <= full; ++ib) {
                if (std::popcount(ib) != l) continue;
                if ((ib & need) != need) continue;
                std::vector<Letter> merged;
                merged.reserve(static_cast<std::size_t>(r));
                int ai = 0, bi = 0;
                for (int u = 0; u < r; ++u) {
                    const bool in_a = (ia >> u) & 1u;
                    const bool in_b = (ib >> u) & 1u;
                    if (in_a && in_b) {
                        merged.push_back(a.letter(ai++) * b.letter(bi++));
                    } else if (in_a) {
                        merged.push_back(a.letter(ai++));
                    } else {
                        merged.push_back(b.letter(bi++));
                    }
                }
                out.add_term(Word(std::move(merged)), Rational(1));
            }
        }
    }
    return out;
}

ZeroClusters symmetrization_group(const std::vector<long long>& s) {
    ZeroClusters out;
    out.order = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 0) {
            ++i;
            continue;
        }
        std::vector<int> block;
        while (i < s.size() && s[i] == 0) {
            block.push_back(static_cast<int>(i) + 1);
            ++i;
        }
        out.order *= factorial(static_cast<unsigned>(block.size()));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

bool hoffman_identity_check(const std::vector<Letter>& a, const Letter& b) {
    const std::size_t k = a.size();
    if (k > 5) {
        throw DomainError("hoffman_identity_check: depth exceeds 5");
    }

    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);

    HopfElement sym_a;
    std::vector<std::size_t> p = idx;
    std::sort(p.begin(), p.end());
    do {
        std::vector<Letter> w;
        w.reserve(k);
        for (std::size_t i : p) {
            w.push_back(a[i]);
        }
        sym_a.add_term(Word(std::move(w)), Rational(1));
    } while (std::next_permutation(p.begin(), p.end()));
    if (k == 0) {
        sym_a = HopfElement::unit();
    }

    HopfElement lhs = quasi_shuffle(sym_a, HopfElement(Word({b})));

    HopfElement rhs;
    std::vector<std::size_t> q(k + 1);
    std::iota(q.begin(), q.end(), 0);
    do {
        std::vector<Letter> w;
        w.reserve(k + 1);
        for (std::size_t i : q) {
            w.push_back(i < k ? a[i] : b);
        }
        rhs.add_term(Word(std::move(w)), Rational(1));
    } while (std::next_permutation(q.begin(), q.end()));

    for (std::size_t slot = 0; slot < k; ++slot) {
        std::vector<std::size_t> r = idx;
        do {
            std::vector<Letter> w;
            w.reserve(k);
            for (std::size_t pos = 0; pos < k; ++pos) {
                Letter l = a[r[pos]];
                if (pos == slot) {
                    l = l * b;
                }
                w.push_back(l);
            }
            rhs.add_term(Word(std::move(w)), Rational(1));
        } while (std::next_permutation(r.begin(), r.end()));
    }

    return lhs == rhs;
}

} // namespace mzv
