#include "mzv/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "mzv/errors.hpp"

namespace mzv {

std::vector<std::vector<int>> compositions_of(int k) {
    std::vector<std::vector<int>> out;
    if (k < 0) {
        throw DomainError("compositions_of requires k >= 0");
    }
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > 20) {
        throw DomainError("compositions_of limited to k <= 20");
    }
    // Each of the k-1 gaps between adjacent units is either a cut or not.
    const unsigned long long total = 1ull << (k - 1);
    out.reserve(total);
    for (unsigned long long mask = 0; mask < total; ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < k - 1; ++i) {
            if (mask & (1ull << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

namespace {

// Bogoliubov preparation: Z(w) plus the counterterm convolution over
// proper splits.  Callers pass win.lo at the policy floor, so slicing
// the products back to win only discards exponents below every term's
// pole order.  Factor windows are tight: the counterterm vanishes
// outside [-pole_bound(left), -1] (upward zero-fill is free), the Z
// factor below -pole_bound(right).
LaurentSeries prepare(const Word& w, Window win) {
    LaurentSeries acc = z_nonpos(w, win);
    for (std::size_t i = 1; i < w.depth(); ++i) {
        const Word left_w = w.prefix(i);
        const Word right_w = w.suffix_from(i);
        const int left_lo = -pole_bound(left_w);
        const int right_lo = -pole_bound(right_w);
        const LaurentSeries left =
            phi_minus(left_w, Window{left_lo, std::max(win.hi - right_lo, left_lo)});
        const LaurentSeries right =
            z_nonpos(right_w, Window{right_lo, std::max(win.hi - left_lo, right_lo)});
        acc = acc + (left * right).with_window(win);
    }
    return acc;
}

using CharKey = std::pair<Word, int>;

// Counterterms are pure pole parts supported on [-(weight+depth), -1],
// so one computation at the policy floor serves every window.
const LaurentSeries& lookup_phi_minus(const Word& w) {
    thread_local std::map<CharKey, LaurentSeries> cache;
    const int floor = -(pole_bound(w) + window_margin());
    const CharKey key{w, floor};
    auto it = cache.find(key);
    if (it == cache.end()) {
        LaurentSeries p = -prepare(w, Window{floor, 0}).pole_part();
        it = cache.emplace(key, std::move(p)).first;
    }
    return it->second;
}

// Power series memo grown in hi on demand, like the Z cache.
const LaurentSeries& lookup_phi_plus(const Word& w, int need_hi) {
    thread_local std::map<CharKey, LaurentSeries> cache;
    const int floor = -(pole_bound(w) + window_margin());
    const CharKey key{w, floor};
    auto it = cache.find(key);
    if (it == cache.end() || it->second.hi() < need_hi) {
        LaurentSeries p = prepare(w, Window{floor, need_hi}).power_part();
        if (it == cache.end()) {
            it = cache.emplace(key, std::move(p)).first;
        } else {
            it->second = std::move(p);
        }
    }
    return it->second;
}

} // namespace

LaurentSeries phi_minus(const Word& w, Window win) {
    if (w.empty()) {
        return LaurentSeries::scalar(RatFunc(Rational(1)), win);
    }
    return lookup_phi_minus(w).with_window(win);
}

LaurentSeries phi_plus(const Word& w, Window win) {
    if (w.empty()) {
        return LaurentSeries::scalar(RatFunc(Rational(1)), win);
    }
    if (win.hi < 0) {
        // A power series is exactly zero on any all-negative window.
        return LaurentSeries::zero(win);
    }
    return lookup_phi_plus(w, win.hi).with_window(win);
}

LaurentSeries phi_plus_closed(const Word& w, Window win) {
    if (w.empty()) {
        return LaurentSeries::scalar(RatFunc(Rational(1)), win);
    }
    if (win.lo > -pole_bound(w)) {
        throw DomainError("phi_plus_closed window must reach -(weight+depth)");
    }
    const int k = static_cast<int>(w.depth());
    LaurentSeries acc(win);
    for (const auto& parts : compositions_of(k)) {
        const int p = static_cast<int>(parts.size());
        std::optional<LaurentSeries> t;
        std::size_t start = 0;
        for (int j = 1; j <= p; ++j) {
            // Nesting level j is sliced to hi_j; each enclosing product
            // consumes one more factor reaching down to win.lo.
            const int hi_j = win.hi - (p - j) * win.lo;
            std::vector<Letter> seg;
            seg.reserve(parts[j - 1]);
            for (int u = 0; u < parts[j - 1]; ++u) {
                seg.push_back(w.letter(start + u));
            }
            start += parts[j - 1];
            const Word segw{std::move(seg)};
            if (!t.has_value()) {
                t = z_nonpos(segw, Window{win.lo, hi_j});
            } else {
                const LaurentSeries u = -t->pole_part(); // window {lo, hi_j - lo}
                t = (z_nonpos(segw, Window{win.lo, hi_j - win.lo}) * u).with_window(Window{win.lo, hi_j});
            }
        }
        acc = acc + t->power_part();
    }
    return acc;
}

BirkhoffResult birkhoff_decompose(const Word& w, Window win) {
    return BirkhoffResult{phi_minus(w, win), phi_plus(w, win)};
}

RatFunc zeta_directional(const Word& w) {
    return phi_plus(w, Window{0, 0}).coeff(0);
}

} // namespace mzv
