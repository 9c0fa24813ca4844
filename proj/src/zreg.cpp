#include "mzv/zreg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <tuple>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"

namespace mzv {

int window_margin() {
    const char* v = std::getenv("MZV_WINDOW_MARGIN");
    if (v == nullptr || *v == '\0') {
        return 0;
    }
    return std::atoi(v);
}

int pole_bound(const Word& w) {
    return static_cast<int>(w.weight() + static_cast<long long>(w.depth()));
}

Window default_window(const Word& w) {
    const int r = pole_bound(w) + window_margin();
    return Window{-r, r};
}

LaurentSeries z_depth1(long long s, const Direction& r, Window win) {
    if (s > 0) {
        throw UnsupportedSignature("z_depth1 requires s <= 0");
    }
    const int pole = static_cast<int>(s) - 1;
    if (win.lo > pole) {
        throw DomainError("z_depth1 window must reach the pole order s-1");
    }
    LaurentSeries out(win);

    const Poly rp = Poly(r.c) + Poly(r.m) * Poly::variable();
    if (pole <= win.hi) {
        Poly den(Rational(1));
        for (long long i = 0; i < 1 - s; ++i) {
            den *= rp;
        }
        const Rational lead = Rational(parity_sign(s - 1)) * Rational(factorial(static_cast<unsigned>(-s)));
        out.set_coeff(pole, RatFunc(Poly(lead), den));
    }

    RatFunc rpow(Rational(1));
    Rational inv_fact(1);
    for (int j = 0; j <= win.hi; ++j) {
        if (j > 0) {
            rpow *= RatFunc(rp);
            inv_fact /= Rational(j);
        }
        const Rational z = zeta_nonpositive(s - j);
        if (!z.is_zero()) {
            out.set_coeff(j, rpow * RatFunc(z * inv_fact));
        }
    }
    return out;
}

namespace {

// Memo entry: the series computed at the word's policy floor, grown in hi
// on demand.  Keyed by (word, floor) so a margin change recomputes.
using ZKey = std::pair<Word, int>;

LaurentSeries compute_z(const Word& w, Window win);

const LaurentSeries& lookup_z(const Word& w, int need_hi) {
    thread_local std::map<ZKey, LaurentSeries> cache;
    const int floor = -(pole_bound(w) + window_margin());
    const ZKey key{w, floor};
    auto it = cache.find(key);
    if (it == cache.end() || it->second.hi() < need_hi) {
        LaurentSeries s = compute_z(w, Window{floor, need_hi});
        if (it == cache.end()) {
            it = cache.emplace(key, std::move(s)).first;
        } else {
            it->second = std::move(s);
        }
    }
    return it->second;
}

// Serves any request window from the memoized series.  Zero-fill below
// the policy floor is exact: the floor is at or below the pole order.
LaurentSeries serve_z(const Word& w, Window win) {
    if (w.empty()) {
        return LaurentSeries::scalar(RatFunc(Rational(1)), win);
    }
    const int floor = -(pole_bound(w) + window_margin());
    if (win.hi < floor) {
        // Entirely below the pole order: exactly zero.
        return LaurentSeries::zero(win);
    }
    return lookup_z(w, win.hi).with_window(win);
}

LaurentSeries compute_z(const Word& w, Window win) {
    if (w.depth() == 1) {
        return z_depth1(w.letter(0).s, w.letter(0).dir, win);
    }
    const Letter& l1 = w.letter(0);
    const Letter& l2 = w.letter(1);
    LaurentSeries acc(win);
    for (long long j = 0; j <= -l1.s; ++j) {
        std::vector<Letter> tail;
        tail.reserve(w.depth() - 1);
        tail.push_back(Letter{l1.s + l2.s + j, l1.dir + l2.dir});
        for (std::size_t i = 2; i < w.depth(); ++i) {
            tail.push_back(w.letter(i));
        }
        const Word tail_word(std::move(tail));
        // Tight factor windows: the head vanishes below its pole order
        // -j-1 and the tail below -pole_bound(tail), so the product's
        // claimed window reaches win.hi with no excess height.  When
        // win.hi sits below -pole_bound(w) the term is zero there and
        // with_window's fill is exact regardless.
        const int head_lo = -static_cast<int>(j) - 1;
        const int tail_lo = -pole_bound(tail_word);
        const Window head_win{head_lo, std::max(win.hi - tail_lo, head_lo)};
        const Window tail_win{tail_lo, std::max(win.hi - head_lo, tail_lo)};
        const LaurentSeries head = z_depth1(-j, l1.dir, head_win);
        const LaurentSeries rest = serve_z(tail_word, tail_win);
        LaurentSeries term = (head * rest).with_window(win);
        if (j > 0) {
            term = term.scaled(RatFunc(Rational(binomial(-l1.s, j))));
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace

LaurentSeries z_nonpos(const Word& w, Window win) {
    if (!w.all_nonpositive()) {
        throw UnsupportedSignature("z_nonpos requires all exponents <= 0");
    }
    if (!w.empty() && win.lo > -pole_bound(w)) {
        throw DomainError("z_nonpos window must reach -(weight+depth)");
    }
    return serve_z(w, win);
}

bool z_quasi_shuffle_check(const Word& a, const Word& b) {
    const int bound = pole_bound(a) + pole_bound(b) + window_margin();
    const Window win{-bound, bound};
    // Operands tall enough that the product claims all of win.
    const Window wide{-bound, 2 * bound};
    const LaurentSeries lhs = z_nonpos(a, wide) * z_nonpos(b, wide);

    const HopfElement expansion = quasi_shuffle(a, b);
    LaurentSeries rhs(win);
    for (const auto& [w, c] : expansion.terms()) {
        rhs = rhs + z_nonpos(w, win).scaled(RatFunc(c));
    }
    return lhs.with_window(win) == rhs;
}

} // namespace mzv
