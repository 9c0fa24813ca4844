#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/zreg.hpp"

using namespace mzv;

namespace {

Letter L(long long s, long long c, long long m = 0) {
    return Letter{s, Direction(Rational(c), Rational(m))};
}

Word W(std::vector<Letter> ls) { return Word(std::move(ls)); }

RatFunc rat(long long num, long long den = 1) { return RatFunc(Rational(num, den)); }

// Checks that den divides base^k for some k (all prime factors of den
// appear in base).
bool divides_power(const Poly& den, const Poly& base) {
    Poly rest = den;
    while (rest.degree() > 0) {
        const Poly g = Poly::gcd(rest, base);
        if (g.degree() == 0) return false;
        rest = Poly::divmod(rest, g).first;
    }
    return true;
}

Word random_nonpos_word(std::mt19937& rng, std::size_t depth, long long max_abs) {
    std::uniform_int_distribution<long long> exp(-max_abs, 0);
    std::uniform_int_distribution<long long> cdist(0, 3);
    std::uniform_int_distribution<long long> mdist(0, 2);
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < depth; ++i) {
        long long c = cdist(rng), m = mdist(rng);
        if (c == 0 && m == 0) c = 1;
        ls.push_back(L(exp(rng), c, m));
    }
    return W(std::move(ls));
}

} // namespace

TEST_CASE("policy window covers the pole order") {
    const Word w = W({L(-1, 1), L(-2, 2)});
    CHECK(pole_bound(w) == 5);
    const Window win = default_window(w);
    CHECK(win.lo <= -5);
    CHECK(win.hi >= 5);
}

TEST_CASE("depth-1 expansion at exponent 0, direction 1") {
    const LaurentSeries z = z_depth1(0, Direction::constant(Rational(1)), Window{-1, 3});
    CHECK(z.coeff(-1) == rat(-1));
    CHECK(z.coeff(0) == rat(-1, 2));
    CHECK(z.coeff(1) == rat(-1, 12));
    CHECK(z.coeff(2) == rat(0));
    CHECK(z.coeff(3) == rat(1, 720));
}

TEST_CASE("depth-1 expansion at exponent -1, direction 1") {
    const LaurentSeries z = z_depth1(-1, Direction::constant(Rational(1)), Window{-2, 2});
    CHECK(z.coeff(-2) == rat(1));
    CHECK(z.coeff(-1) == rat(0));
    CHECK(z.coeff(0) == rat(-1, 12));
    CHECK(z.coeff(1) == rat(0));
    CHECK(z.coeff(2) == rat(1, 240));
}

TEST_CASE("depth-1 expansion scales with the direction") {
    const LaurentSeries z = z_depth1(0, Direction::constant(Rational(2)), Window{-1, 1});
    CHECK(z.coeff(-1) == rat(-1, 2));
    CHECK(z.coeff(0) == rat(-1, 2));
    CHECK(z.coeff(1) == rat(-1, 6));
}

TEST_CASE("depth-1 expansion with an affine direction") {
    // r = 1 + d: the pole coefficient is -1/(1+d).
    const LaurentSeries z = z_depth1(0, Direction(Rational(1), Rational(1)), Window{-1, 1});
    const Poly r = Poly(std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(z.coeff(-1) == RatFunc(Poly(Rational(-1)), r));
    CHECK(z.coeff(0) == rat(-1, 2));
    CHECK(z.coeff(1) == RatFunc(Poly(Rational(-1, 12)) * r));
}

TEST_CASE("depth-1 window validation") {
    CHECK_THROWS_AS(z_depth1(1, Direction::constant(Rational(1)), Window{-2, 2}),
                    UnsupportedSignature);
    CHECK_THROWS_AS(z_depth1(-1, Direction::constant(Rational(1)), Window{-1, 2}),
                    DomainError);
}

TEST_CASE("depth one delegates") {
    const Word w = W({L(-1, 1)});
    const Window win{-2, 4};
    CHECK(z_nonpos(w, win) == z_depth1(-1, Direction::constant(Rational(1)), win));
    CHECK(z_nonpos(w, win).coeff(0) == rat(-1, 12));
}

TEST_CASE("zero-pair word factors through the merged direction") {
    const Direction r1 = Direction::constant(Rational(1));
    const Direction r2 = Direction::constant(Rational(2));
    const Word w = W({Letter{0, r1}, Letter{0, r2}});
    const LaurentSeries lhs = z_nonpos(w, Window{-2, 2});
    const LaurentSeries a = z_depth1(0, r1, Window{-1, 3});
    const LaurentSeries b = z_depth1(0, r1 + r2, Window{-1, 3});
    CHECK(lhs == (a * b).with_window(Window{-2, 2}));
}

TEST_CASE("binomial reduction at depth 2 matches a manual expansion") {
    const Direction r1(Rational(1), Rational(1));
    const Direction r2(Rational(1), Rational(1));
    const Word w = W({Letter{-1, r1}, Letter{-1, r2}});
    const Window win{-4, 2};
    const LaurentSeries z = z_nonpos(w, win);

    // j = 0: Z(0|r1) Z(-2|r1+r2);  j = 1: Z(-1|r1) Z(-1|r1+r2).
    const Window tall{-4, 8};
    const LaurentSeries manual =
        (z_depth1(0, r1, tall) * z_depth1(-2, r1 + r2, tall)).with_window(win)
        + (z_depth1(-1, r1, tall) * z_depth1(-1, r1 + r2, tall)).with_window(win);
    CHECK(z == manual);
}

TEST_CASE("series is exactly zero below the pole order") {
    const Word w = W({L(0, 1)});
    const LaurentSeries z = z_nonpos(w, Window{-10, -2});
    CHECK(z.is_zero());
}

TEST_CASE("window validation") {
    const Word w = W({L(-1, 1), L(-2, 2)});
    CHECK_THROWS_AS(z_nonpos(w, Window{-4, 4}), DomainError);
    CHECK_THROWS_AS(z_nonpos(W({L(1, 1)}), Window{-3, 3}), UnsupportedSignature);
}

TEST_CASE("multiplicativity examples") {
    CHECK(z_quasi_shuffle_check(W({L(0, 1)}), W({L(0, 1)})));
    CHECK(z_quasi_shuffle_check(W({L(-1, 1)}), W({L(-2, 3)})));
    CHECK(z_quasi_shuffle_check(Word(), W({L(-1, 1)})));
}

TEST_CASE("multiplicativity on random words") {
    std::mt19937 rng(1201);
    std::uniform_int_distribution<std::size_t> d(1, 2);
    for (int i = 0; i < 10; ++i) {
        const Word a = random_nonpos_word(rng, d(rng), 2);
        const Word b = random_nonpos_word(rng, d(rng), 2);
        CAPTURE(a.str());
        CAPTURE(b.str());
        CHECK(z_quasi_shuffle_check(a, b));
    }
}

TEST_CASE("denominators only involve cumulative direction sums") {
    const Direction r1(Rational(1), Rational(1));
    const Direction r2(Rational(2), Rational(1));
    const Word w = W({Letter{-1, r1}, Letter{-2, r2}});
    const LaurentSeries z = z_nonpos(w, default_window(w));

    const Poly d1 = Poly(std::vector<Rational>{Rational(1), Rational(1)});
    const Poly d12 = Poly(std::vector<Rational>{Rational(3), Rational(2)});
    const Poly base = d1 * d12;
    for (int k = z.lo(); k <= z.hi(); ++k) {
        CAPTURE(k);
        CHECK(divides_power(z.coeff(k).den(), base));
    }
}
