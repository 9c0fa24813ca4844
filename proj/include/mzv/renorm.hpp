#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/birkhoff.hpp"
#include "mzv/composition.hpp"

namespace mzv {

// Word over (s_i | r_i) with the canonical limit directions r_i = |s_i| + d.
Word dress_nonpositive(const Composition& s);
// Word with fixed positive rational directions (no d dependence).
Word dress_concrete(const Composition& s, const std::vector<Rational>& r);

// Renormalized MZV at all-non-positive arguments: the e^0 coefficient of
// the renormalized character along r_i = |s_i| + d, evaluated at d = 0.
// Exact rational.  Depth <= 6; weight <= 16 (<= 64 at depth 1).
Rational gzeta_nonpos(const Composition& s);

// Sum of zeta_directional over the zero-cluster symmetrization group
// acting on concrete positive directions.  Independent of the direction
// choice, and equal to |group| * gzeta_nonpos(s).
Rational gzeta_symmetrized(const Composition& s, const std::vector<Rational>& dirs);

// Depth-2 closed form in Bernoulli numbers; rejects (0,0).
Rational z2_closed_form(long long s1, long long s2);

// Analytic continuation of the double zeta function at (s1, s2) <= 0 with
// s1 + s2 negative odd, where it is regular: -zeta(s1+s2)/2, except that
// s2 = 0 picks up the extra boundary term zeta(0)*zeta(s1) of the
// iterated-limit formula (so the value there is -zeta(s1)).  Agrees with
// gzeta_nonpos on the whole domain.
Rational parity_identity(long long s1, long long s2);

// One monomial T^tpow * z(symbol); the empty composition is the unit
// symbol.  Ordered by T-degree descending, then symbol lexicographic,
// so rendering is stable.
struct SymbolTerm {
    int tpow;
    Composition symbol;

    friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
};
struct SymbolTermOrder {
    bool operator()(const SymbolTerm& a, const SymbolTerm& b) const {
        if (a.tpow != b.tpow) {
            return a.tpow > b.tpow;
        }
        return a.symbol.parts < b.symbol.parts;
    }
};

// Element of Q[T] spanned by convergent-MZV symbols: a finite rational
// combination of T^j * z(s) monomials with no zero coefficients.
class SymbolicValue {
public:
    using Terms = std::map<SymbolTerm, Rational, SymbolTermOrder>;

    SymbolicValue() = default;

    static SymbolicValue constant(const Rational& c);
    static SymbolicValue one() { return constant(Rational(1)); }
    static SymbolicValue t_power(int k);
    static SymbolicValue symbol(const Composition& s);

    // symbol must be empty or convergent; tpow >= 0.
    void add_term(int tpow, const Composition& symbol, const Rational& coeff);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    SymbolicValue& operator+=(const SymbolicValue& o);
    friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
    SymbolicValue operator-() const;
    friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a += -b; }
    SymbolicValue scaled(const Rational& c) const;

    friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
        return a.terms_ == b.terms_;
    }

    // Renders like "1/2*T^2 - 1/2*z(2)"; "0" when empty.
    std::string str() const;

private:
    Terms terms_;
};

// Product in Q[T]<symbols>: T-powers add, symbols multiply by the
// quasi-shuffle of their compositions.
SymbolicValue symbolic_mul(const SymbolicValue& a, const SymbolicValue& b);

// Quasi-shuffle of two bare exponent vectors: the expansion of a * b
// grouped by exponent vector, directions discarded.
std::map<Composition, Rational> stuffle_exponents(const Composition& a, const Composition& b);

// Renormalized MZV at all-positive arguments as a T-polynomial over
// convergent symbols: the bare symbol when s1 >= 2, otherwise the
// leading-ones recursion with base gz(1) = T.  Depth <= 6.
SymbolicValue gzeta_positive(const Composition& s);

// Substitutes mzv_numeric for each symbol and t_value for T.
// tol >= 1e-10; the per-symbol budgets sum to at most tol.
double numeric_value(const SymbolicValue& v, double t_value, double tol);

} // namespace mzv
