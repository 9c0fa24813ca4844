#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/mzv_numeric.hpp"
#include "mzv/renorm.hpp"

using namespace mzv;

namespace {

Composition comp(std::vector<long long> parts) { return Composition{std::move(parts)}; }

Rational gz(std::vector<long long> parts) { return gzeta_nonpos(comp(std::move(parts))); }

std::vector<Rational> dirs(std::vector<long long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

} // namespace

TEST_CASE("word dressing") {
    const Word w = dress_nonpositive(comp({-1, 0, -3}));
    REQUIRE(w.depth() == 3);
    CHECK(w.letter(0).s == -1);
    CHECK(w.letter(0).dir == Direction(Rational(1), Rational(1)));
    CHECK(w.letter(1).dir == Direction(Rational(0), Rational(1)));
    CHECK(w.letter(2).dir == Direction(Rational(3), Rational(1)));
    CHECK_THROWS_AS(dress_nonpositive(comp({-1, 2})), UnsupportedSignature);

    const Word c = dress_concrete(comp({0, 0}), dirs({1, 2}));
    CHECK(c.letter(1).dir == Direction(Rational(2), Rational(0)));
    CHECK_THROWS_AS(dress_concrete(comp({0, 0}), dirs({1})), DomainError);
}

TEST_CASE("depth-1 values reduce to zeta") {
    CHECK(gz({0}) == Rational(-1, 2));
    CHECK(gz({-1}) == Rational(-1, 12));
    CHECK(gz({-2}) == Rational(0));
    CHECK(gz({-9}) == Rational(-1, 132));
}

TEST_CASE("depth-2 table anchors") {
    CHECK(gz({-1, -1}) == Rational(1, 288));
    CHECK(gz({-1, -2}) == Rational(-1, 240));
    CHECK(gz({-2, -1}) == Rational(-1, 240));
    CHECK(gz({-1, -3}) == Rational(83, 64512));
    CHECK(gz({-3, -1}) == Rational(-71, 35840));
    CHECK(gz({-1, -4}) == Rational(1, 504));
    CHECK(gz({-2, -2}) == Rational(0));
    CHECK(gz({-3, -3}) == Rational(1, 28800));
    CHECK(gz({-4, -4}) == Rational(0));
    CHECK(gz({-5, -5}) == Rational(1, 127008));
    CHECK(gz({-6, -6}) == Rational(0));
    CHECK(gz({-7, -7}) == Rational(1, 115200));
    CHECK(gz({-6, -5}) == Rational(-691, 65520));
}

TEST_CASE("the zero pair") {
    CHECK(gz({0, 0}) == Rational(3, 8));
}

TEST_CASE("quasi-shuffle relation on concrete values") {
    // gz(-1) gz(-2) = gz(-1,-2) + gz(-2,-1) + gz(-3).
    CHECK(gz({-1}) * gz({-2}) == gz({-1, -2}) + gz({-2, -1}) + gz({-3}));
    // gz(0)^2 = 2 gz(0,0) + gz(0).
    CHECK(gz({0}) * gz({0}) == Rational(2) * gz({0, 0}) + gz({0}));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(gzeta_nonpos(comp({})), DomainError);
    CHECK_THROWS_AS(gzeta_nonpos(comp({-1, 2})), UnsupportedSignature);
    CHECK_THROWS_AS(gzeta_nonpos(comp({0, 0, 0, 0, 0, 0, 0})), DomainError);
    CHECK_THROWS_AS(gzeta_nonpos(comp({-10, -8})), DomainError);
}

TEST_CASE("closed form matches the pipeline on a sample grid") {
    for (long long s1 = -3; s1 <= 0; ++s1) {
        for (long long s2 = -3; s2 <= 0; ++s2) {
            if (s1 == 0 && s2 == 0) continue;
            CAPTURE(s1);
            CAPTURE(s2);
            CHECK(z2_closed_form(s1, s2) == gz({s1, s2}));
        }
    }
    CHECK_THROWS_AS(z2_closed_form(0, 0), DomainError);
    CHECK(z2_closed_form(0, -1) == Rational(1, 24));
}

TEST_CASE("parity identity") {
    CHECK(parity_identity(-1, -2) == Rational(-1, 240));
    CHECK(parity_identity(-1, -4) == Rational(1, 504));
    CHECK(parity_identity(-6, -5) == Rational(-691, 65520));
    CHECK_THROWS_AS(parity_identity(-1, -1), DomainError);
    CHECK_THROWS_AS(parity_identity(0, 0), DomainError);
    for (long long s1 = -4; s1 <= 0; ++s1) {
        for (long long s2 = -4; s2 <= 0; ++s2) {
            if ((s1 + s2) >= 0 || (s1 + s2) % 2 == 0) continue;
            CAPTURE(s1);
            CAPTURE(s2);
            CHECK(gz({s1, s2}) == parity_identity(s1, s2));
        }
    }
}

TEST_CASE("symmetrized limit is direction-independent") {
    CHECK(gzeta_symmetrized(comp({0, 0}), dirs({1, 2})) == Rational(3, 4));
    CHECK(gzeta_symmetrized(comp({0, 0}), dirs({3, 5})) == Rational(3, 4));
    CHECK(gzeta_symmetrized(comp({0, 0}), dirs({2, 2})) == Rational(3, 4));
    CHECK(gzeta_symmetrized(comp({-1, -3}), dirs({1, 3})) == Rational(83, 64512));

    const Rational a = gzeta_symmetrized(comp({0, 0, 0}), dirs({1, 2, 3}));
    const Rational b = gzeta_symmetrized(comp({0, 0, 0}), dirs({2, 5, 7}));
    const Rational c = gzeta_symmetrized(comp({0, 0, 0}), dirs({1, 1, 2}));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == Rational(6) * gz({0, 0, 0}));
}

TEST_CASE("symbolic values render canonically") {
    CHECK(SymbolicValue().str() == "0");
    CHECK(SymbolicValue::t_power(1).str() == "T");
    CHECK(gzeta_positive(comp({1})).str() == "T");
    CHECK(gzeta_positive(comp({1, 1})).str() == "1/2*T^2 - 1/2*z(2)");
    CHECK(gzeta_positive(comp({1, 2})).str() == "T*z(2) - z(2,1) - z(3)");
}

TEST_CASE("symbolic value term algebra") {
    SymbolicValue v;
    v.add_term(2, comp({}), Rational(1, 2));
    v.add_term(0, comp({2}), Rational(-1, 2));
    CHECK(v == gzeta_positive(comp({1, 1})));
    v.add_term(0, comp({2}), Rational(1, 2));
    CHECK(v.size() == 1);
    CHECK_THROWS_AS(v.add_term(-1, comp({}), Rational(1)), DomainError);
    CHECK_THROWS_AS(v.add_term(0, comp({1, 2}), Rational(1)), DomainError);
}

TEST_CASE("convergent arguments stay bare symbols") {
    CHECK(gzeta_positive(comp({2})) == SymbolicValue::symbol(comp({2})));
    CHECK(gzeta_positive(comp({2, 1})) == SymbolicValue::symbol(comp({2, 1})));
    std::mt19937 rng(1401);
    std::uniform_int_distribution<long long> front(2, 5);
    std::uniform_int_distribution<long long> rest(1, 4);
    std::uniform_int_distribution<std::size_t> d(1, 4);
    for (int i = 0; i < 10; ++i) {
        std::vector<long long> parts{front(rng)};
        const std::size_t depth = d(rng);
        for (std::size_t k = 1; k < depth; ++k) parts.push_back(rest(rng));
        const Composition s = comp(parts);
        CAPTURE(i);
        CHECK(gzeta_positive(s) == SymbolicValue::symbol(s));
    }
}

TEST_CASE("positive input validation") {
    CHECK_THROWS_AS(gzeta_positive(comp({1, -1})), UnsupportedSignature);
    CHECK_THROWS_AS(gzeta_positive(comp({})), DomainError);
    CHECK_THROWS_AS(gzeta_positive(comp({1, 1, 1, 1, 1, 1, 1})), DomainError);
}

TEST_CASE("bare exponent stuffle") {
    const auto m = stuffle_exponents(comp({-1}), comp({-2}));
    REQUIRE(m.size() == 3);
    CHECK(m.at(comp({-1, -2})) == Rational(1));
    CHECK(m.at(comp({-2, -1})) == Rational(1));
    CHECK(m.at(comp({-3})) == Rational(1));

    const auto p = stuffle_exponents(comp({1}), comp({1}));
    CHECK(p.at(comp({1, 1})) == Rational(2));
    CHECK(p.at(comp({2})) == Rational(1));
}

TEST_CASE("symbol products expand by the stuffle") {
    const SymbolicValue z2 = SymbolicValue::symbol(comp({2}));
    SymbolicValue expect;
    expect.add_term(0, comp({2, 2}), Rational(2));
    expect.add_term(0, comp({4}), Rational(1));
    CHECK(symbolic_mul(z2, z2) == expect);

    SymbolicValue tz2;
    tz2.add_term(1, comp({2}), Rational(1));
    CHECK(symbolic_mul(SymbolicValue::t_power(1), z2) == tz2);
    CHECK(symbolic_mul(SymbolicValue::one(), tz2) == tz2);
}

TEST_CASE("positive path satisfies the quasi-shuffle relation") {
    const std::vector<std::pair<std::vector<long long>, std::vector<long long>>> cases = {
        {{1}, {1}}, {{1}, {2}}, {{1, 1}, {2}}, {{2}, {3}}, {{1, 2}, {1}}, {{2, 1}, {1, 1}},
    };
    for (const auto& [av, bv] : cases) {
        const Composition a = comp(av);
        const Composition b = comp(bv);
        const SymbolicValue lhs = symbolic_mul(gzeta_positive(a), gzeta_positive(b));
        SymbolicValue rhs;
        for (const auto& [w, c] : stuffle_exponents(a, b)) {
            rhs += gzeta_positive(w).scaled(c);
        }
        CAPTURE(a.parts);
        CAPTURE(b.parts);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("numeric evaluation of symbolic values") {
    const double tol = 1e-8;
    const double z2 = mzv_numeric(comp({2}), tol);

    const double v11 = numeric_value(gzeta_positive(comp({1, 1})), 0.0, tol);
    CHECK(std::abs(v11 + z2 / 2) < 1e-6);

    // gz(1,2) + z(2,1) + z(3) = T z(2), checked at T = 1.
    SymbolicValue lhs = gzeta_positive(comp({1, 2}));
    lhs.add_term(0, comp({2, 1}), Rational(1));
    lhs.add_term(0, comp({3}), Rational(1));
    SymbolicValue rhs;
    rhs.add_term(1, comp({2}), Rational(1));
    const double le = numeric_value(lhs, 1.0, tol);
    const double re = numeric_value(rhs, 1.0, tol);
    CHECK(std::abs(le - re) < 4 * tol);

    CHECK_THROWS_AS(numeric_value(rhs, 1.0, 1e-11), DomainError);
}
