#include "mzv/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

std::string window_str(Window w) {
    return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]";
}

} // namespace

LaurentSeries::LaurentSeries(Window w) : w_(w) {
    if (!w.valid()) {
        throw EmptyWindow("series window " + window_str(w) + " is empty");
    }
    c_.assign(static_cast<std::size_t>(w.length()), RatFunc());
}

LaurentSeries LaurentSeries::scalar(const RatFunc& v, Window w) {
    LaurentSeries r(w);
    if (w.lo <= 0 && 0 <= w.hi) {
        r.set_coeff(0, v);
    }
    return r;
}

LaurentSeries LaurentSeries::monomial(const RatFunc& v, int k, Window w) {
    LaurentSeries r(w);
    r.set_coeff(k, v);
    return r;
}

const RatFunc& LaurentSeries::coeff(int k) const {
    if (k < w_.lo || k > w_.hi) {
        throw OutOfWindow("coefficient e^" + std::to_string(k) + " outside window " +
                          window_str(w_));
    }
    return c_[static_cast<std::size_t>(k - w_.lo)];
}

void LaurentSeries::set_coeff(int k, RatFunc v) {
    if (k < w_.lo || k > w_.hi) {
        throw OutOfWindow("coefficient e^" + std::to_string(k) + " outside window " +
                          window_str(w_));
    }
    c_[static_cast<std::size_t>(k - w_.lo)] = std::move(v);
}

bool LaurentSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFunc& v) { return v.is_zero(); });
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    Window w{std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
    if (!w.valid()) {
        throw EmptyWindow("sum of windows " + window_str(a.window()) + " and " +
                          window_str(b.window()) + " is empty");
    }
    LaurentSeries r(w);
    for (int k = w.lo; k <= w.hi; ++k) {
        r.set_coeff(k, a.coeff(k) + b.coeff(k));
    }
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r(w_);
    for (int k = w_.lo; k <= w_.hi; ++k) {
        const RatFunc& v = coeff(k);
        if (!v.is_zero()) {
            r.set_coeff(k, -v);
        }
    }
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    Window w{a.lo() + b.lo(), std::min(a.lo() + b.hi(), b.lo() + a.hi())};
    LaurentSeries r(w);
    for (int i = a.lo(); i <= a.hi(); ++i) {
        const RatFunc& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        const int jlo = std::max(b.lo(), w.lo - i);
        const int jhi = std::min(b.hi(), w.hi - i);
        for (int j = jlo; j <= jhi; ++j) {
            const RatFunc& bj = b.coeff(j);
            if (bj.is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + ai * bj);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(const RatFunc& c) const {
    LaurentSeries r(w_);
    if (c.is_zero()) {
        return r;
    }
    for (int k = w_.lo; k <= w_.hi; ++k) {
        const RatFunc& v = coeff(k);
        if (!v.is_zero()) {
            r.set_coeff(k, v * c);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::pole_part() const {
    LaurentSeries r(w_);
    const int top = std::min(w_.hi, -1);
    for (int k = w_.lo; k <= top; ++k) {
        r.set_coeff(k, coeff(k));
    }
    return r;
}

LaurentSeries LaurentSeries::power_part() const {
    LaurentSeries r(w_);
    for (int k = std::max(w_.lo, 0); k <= w_.hi; ++k) {
        r.set_coeff(k, coeff(k));
    }
    return r;
}

LaurentSeries LaurentSeries::with_window(Window w) const {
    LaurentSeries r(w);
    const int lo = std::max(w.lo, w_.lo);
    const int hi = std::min(w.hi, w_.hi);
    for (int k = lo; k <= hi; ++k) {
        r.set_coeff(k, coeff(k));
    }
    return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.window() != b.window()) {
        return false;
    }
    for (int k = a.lo(); k <= a.hi(); ++k) {
        if (!(a.coeff(k) == b.coeff(k))) {
            return false;
        }
    }
    return true;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = w_.lo; k <= w_.hi; ++k) {
        const RatFunc& v = coeff(k);
        if (v.is_zero()) continue;
        std::string body = v.str();
        bool negated = false;
        if (v.num().degree() <= 0 && body.size() > 1 && body[0] == '-') {
            negated = true;
            body = body.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        const bool needs_parens = body.find(' ') != std::string::npos && k != 0;
        const bool unit = (body == "1") && k != 0;
        if (!unit) {
            if (needs_parens) os << "(" << body << ")";
            else os << body;
        }
        if (k != 0) {
            if (!unit) os << "*";
            os << "e";
            if (k != 1) os << "^" << k;
        }
    }
    if (first) {
        return "0";
    }
    return os.str();
}

} // namespace mzv
