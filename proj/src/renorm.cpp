#include "mzv/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/mzv_numeric.hpp"

namespace mzv {

Word dress_nonpositive(const Composition& s) {
    std::vector<Letter> ls;
    ls.reserve(s.parts.size());
    for (long long p : s.parts) {
        if (p > 0) {
            throw UnsupportedSignature("dress_nonpositive requires all exponents <= 0");
        }
        ls.push_back(Letter{p, Direction(Rational(-p), Rational(1))});
    }
    return Word(std::move(ls));
}

Word dress_concrete(const Composition& s, const std::vector<Rational>& r) {
    if (r.size() != s.parts.size()) {
        throw DomainError("dress_concrete needs one direction per exponent");
    }
    std::vector<Letter> ls;
    ls.reserve(s.parts.size());
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        if (r[i].sign() <= 0) {
            throw DomainError("dress_concrete directions must be positive");
        }
        ls.push_back(Letter{s.parts[i], Direction(r[i], Rational(0))});
    }
    return Word(std::move(ls));
}

namespace {

void check_nonpos_bounds(const Composition& s) {
    if (s.parts.empty()) {
        throw DomainError("gzeta_nonpos requires depth >= 1");
    }
    if (!s.all_nonpositive()) {
        throw UnsupportedSignature("gzeta_nonpos requires all exponents <= 0");
    }
    if (s.depth() > 6) {
        throw DomainError("gzeta_nonpos limited to depth <= 6");
    }
    const long long weight_cap = s.depth() == 1 ? 64 : 16;
    if (s.weight() > weight_cap) {
        throw DomainError("gzeta_nonpos weight bound exceeded");
    }
}

} // namespace

Rational gzeta_nonpos(const Composition& s) {
    check_nonpos_bounds(s);
    using Key = std::pair<std::vector<long long>, int>;
    thread_local std::map<Key, Rational> cache;
    const Key key{s.parts, window_margin()};
    auto it = cache.find(key);
    if (it == cache.end()) {
        Rational v = eval_at_delta_zero(zeta_directional(dress_nonpositive(s)));
        it = cache.emplace(key, std::move(v)).first;
    }
    return it->second;
}

Rational gzeta_symmetrized(const Composition& s, const std::vector<Rational>& dirs) {
    if (s.parts.empty() || !s.all_nonpositive()) {
        throw UnsupportedSignature("gzeta_symmetrized requires all exponents <= 0");
    }
    if (s.depth() > 6) {
        throw DomainError("gzeta_symmetrized limited to depth <= 6");
    }
    if (dirs.size() != s.parts.size()) {
        throw DomainError("gzeta_symmetrized needs one direction per exponent");
    }

    // perm[i] = which input direction sits at slot i; the group permutes
    // slots within each zero cluster independently.
    std::vector<std::size_t> perm(s.parts.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    const ZeroClusters zc = symmetrization_group(s.parts);
    Rational acc(0);
    std::function<void(std::size_t)> go = [&](std::size_t bi) {
        if (bi == zc.blocks.size()) {
            std::vector<Rational> arranged(dirs.size());
            for (std::size_t i = 0; i < dirs.size(); ++i) {
                arranged[i] = dirs[perm[i]];
            }
            acc += eval_at_delta_zero(zeta_directional(dress_concrete(s, arranged)));
            return;
        }
        std::vector<std::size_t> slots;
        slots.reserve(zc.blocks[bi].size());
        for (int one_based : zc.blocks[bi]) {
            slots.push_back(static_cast<std::size_t>(one_based - 1));
        }
        std::vector<std::size_t> sources = slots;
        do {
            for (std::size_t j = 0; j < slots.size(); ++j) {
                perm[slots[j]] = sources[j];
            }
            go(bi + 1);
        } while (std::next_permutation(sources.begin(), sources.end()));
    };
    go(0);
    return acc;
}

Rational z2_closed_form(long long s1, long long s2) {
    if (s1 > 0 || s2 > 0) {
        throw UnsupportedSignature("z2_closed_form requires s1, s2 <= 0");
    }
    if (s1 == 0 && s2 == 0) {
        throw DomainError("z2_closed_form excludes (0,0)");
    }
    if (s1 == 0) {
        return zeta_nonpositive(0) * zeta_nonpositive(s2) - zeta_nonpositive(s2 - 1);
    }
    Rational acc(0);
    for (long long j = 0; j <= -s1; ++j) {
        acc += Rational(binomial(-s1, j)) * zeta_nonpositive(-j) * zeta_nonpositive(s1 + s2 + j);
    }
    const Rational ztail = zeta_nonpositive(s1 + s2 - 1);
    acc -= ztail / Rational(1 - s1);
    const Rational base = Rational(s1 + s2) / Rational(s1);
    for (long long j = 0; j <= -s1; ++j) {
        const Rational front(Integer(parity_sign(s1 + s2 - j + 1)), Integer(-s1 - s2 - j + 1));
        acc += Rational(binomial(-s1, j)) * front * base.pow(s1 + s2 + j - 1) * ztail;
    }
    return acc;
}

Rational parity_identity(long long s1, long long s2) {
    if (s1 > 0 || s2 > 0) {
        throw UnsupportedSignature("parity_identity requires s1, s2 <= 0");
    }
    const long long w = s1 + s2;
    if (w >= 0 || w % 2 == 0) {
        throw DomainError("parity_identity requires s1 + s2 negative odd");
    }
    Rational v = zeta_nonpositive(w) * Rational(Integer(-1), Integer(2));
    if (s2 == 0) {
        // Iterated-limit boundary term: the q = -s1 summand of the
        // continuation formula survives as zeta(0)*zeta(s1) here, since
        // s1+s2+q = 0 is no longer a zero of zeta.
        v += Rational(Integer(-1), Integer(2)) * zeta_nonpositive(s1);
    }
    return v;
}

SymbolicValue SymbolicValue::constant(const Rational& c) {
    SymbolicValue v;
    v.add_term(0, Composition{}, c);
    return v;
}

SymbolicValue SymbolicValue::t_power(int k) {
    SymbolicValue v;
    v.add_term(k, Composition{}, Rational(1));
    return v;
}

SymbolicValue SymbolicValue::symbol(const Composition& s) {
    SymbolicValue v;
    v.add_term(0, s, Rational(1));
    return v;
}

void SymbolicValue::add_term(int tpow, const Composition& symbol, const Rational& coeff) {
    if (tpow < 0) {
        throw DomainError("SymbolicValue T-powers are non-negative");
    }
    if (!symbol.parts.empty() && !symbol.convergent()) {
        throw DomainError("SymbolicValue symbols must be convergent compositions");
    }
    if (coeff.is_zero()) {
        return;
    }
    const SymbolTerm key{tpow, symbol};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
    for (const auto& [k, c] : o.terms_) {
        add_term(k.tpow, k.symbol, c);
    }
    return *this;
}

SymbolicValue SymbolicValue::operator-() const {
    SymbolicValue v;
    for (const auto& [k, c] : terms_) {
        v.terms_.emplace(k, -c);
    }
    return v;
}

SymbolicValue SymbolicValue::scaled(const Rational& c) const {
    SymbolicValue v;
    if (c.is_zero()) {
        return v;
    }
    for (const auto& [k, coeff] : terms_) {
        v.terms_.emplace(k, coeff * c);
    }
    return v;
}

std::string SymbolicValue::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) {
                out << "-";
            }
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars;
        if (k.tpow == 1) {
            vars = "T";
        } else if (k.tpow > 1) {
            vars = "T^" + std::to_string(k.tpow);
        }
        if (!k.symbol.parts.empty()) {
            std::string z = "z(";
            for (std::size_t i = 0; i < k.symbol.parts.size(); ++i) {
                if (i > 0) {
                    z += ",";
                }
                z += std::to_string(k.symbol.parts[i]);
            }
            z += ")";
            vars = vars.empty() ? z : vars + "*" + z;
        }
        if (vars.empty()) {
            out << mag.str();
        } else if (mag.is_one()) {
            out << vars;
        } else {
            out << mag.str() << "*" << vars;
        }
    }
    return out.str();
}

std::map<Composition, Rational> stuffle_exponents(const Composition& a, const Composition& b) {
    const auto dress_unit = [](const Composition& c) {
        std::vector<Letter> ls;
        ls.reserve(c.parts.size());
        for (long long p : c.parts) {
            ls.push_back(Letter{p, Direction(Rational(1), Rational(0))});
        }
        return Word(std::move(ls));
    };
    const HopfElement expansion = quasi_shuffle(dress_unit(a), dress_unit(b));
    std::map<Composition, Rational> out;
    for (const auto& [w, c] : expansion.terms()) {
        out[Composition{w.exponents()}] += c;
    }
    return out;
}

SymbolicValue symbolic_mul(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const int tpow = ka.tpow + kb.tpow;
            const Rational c = ca * cb;
            if (ka.symbol.parts.empty()) {
                out.add_term(tpow, kb.symbol, c);
            } else if (kb.symbol.parts.empty()) {
                out.add_term(tpow, ka.symbol, c);
            } else {
                for (const auto& [w, cw] : stuffle_exponents(ka.symbol, kb.symbol)) {
                    out.add_term(tpow, w, c * cw);
                }
            }
        }
    }
    return out;
}

namespace {

const SymbolicValue& gzeta_positive_memo(const Composition& s) {
    thread_local std::map<std::vector<long long>, SymbolicValue> cache;
    auto it = cache.find(s.parts);
    if (it != cache.end()) {
        return it->second;
    }

    SymbolicValue v;
    if (s.parts.empty()) {
        v = SymbolicValue::one();
    } else if (s.parts.front() >= 2) {
        v = SymbolicValue::symbol(s);
    } else {
        // s = (1, tail).  The quasi-shuffle of tail with (1) contains s
        // with multiplicity (1 + leading ones of tail); every other term
        // has strictly fewer leading ones or smaller depth, so solving
        // for s recurses on a well-founded measure.
        const Composition tail{std::vector<long long>(s.parts.begin() + 1, s.parts.end())};
        const Composition one{{1}};
        SymbolicValue rhs = symbolic_mul(gzeta_positive_memo(tail), SymbolicValue::t_power(1));
        Rational mult(0);
        for (const auto& [w, c] : stuffle_exponents(tail, one)) {
            if (w == s) {
                mult = c;
            } else {
                rhs += gzeta_positive_memo(w).scaled(-c);
            }
        }
        if (mult.is_zero()) {
            throw DomainError("leading-ones recursion lost its target term");
        }
        v = rhs.scaled(Rational(1) / mult);
    }
    return cache.emplace(s.parts, std::move(v)).first->second;
}

} // namespace

SymbolicValue gzeta_positive(const Composition& s) {
    if (s.parts.empty()) {
        throw DomainError("gzeta_positive requires depth >= 1");
    }
    if (!s.all_positive()) {
        throw UnsupportedSignature("gzeta_positive requires all exponents >= 1");
    }
    if (s.depth() > 6) {
        throw DomainError("gzeta_positive limited to depth <= 6");
    }
    return gzeta_positive_memo(s);
}

double numeric_value(const SymbolicValue& v, double t_value, double tol) {
    if (!(tol >= 1e-10)) {
        throw DomainError("numeric_value requires tol >= 1e-10");
    }
    double acc = 0.0;
    std::vector<std::pair<double, const Composition*>> symbol_terms;
    for (const auto& [k, c] : v.terms()) {
        const double factor = c.to_double() * std::pow(t_value, k.tpow);
        if (k.symbol.parts.empty()) {
            acc += factor;
        } else if (factor != 0.0) {
            symbol_terms.emplace_back(factor, &k.symbol);
        }
    }
    if (symbol_terms.empty()) {
        return acc;
    }
    const double per_term = tol / static_cast<double>(symbol_terms.size());
    for (const auto& [factor, sym] : symbol_terms) {
        const double budget = per_term / std::max(1.0, std::fabs(factor));
        if (budget < 1e-12) {
            throw CertificationError("numeric_value cannot certify the requested tolerance");
        }
        acc += factor * mzv_numeric(*sym, budget);
    }
    return acc;
}

} // namespace mzv
