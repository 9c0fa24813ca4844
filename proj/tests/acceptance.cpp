// Acceptance gate: one line per criterion, [PASS]/[FAIL]; exit 0 only if
// every criterion passes.  All comparisons are exact except criterion 11,
// which is numeric with stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/mzv_numeric.hpp"
#include "mzv/renorm.hpp"

using namespace mzv;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << name
              << std::endl;
    if (!pass) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, F&& f) {
    bool pass = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        pass = f();
    } catch (const std::exception& e) {
        std::cerr << "criterion " << idx << " raised: " << e.what() << "\n";
        pass = false;
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (std::getenv("MZV_ACCEPT_TIMING") != nullptr) {
        std::cerr << "  criterion " << idx << ": " << dt.count() << "s\n";
    }
    report(idx, name, pass);
}

// Every renormalized value computed for criteria 1-5, keyed by exponent
// vector; criterion 10 recomputes each one under the enlarged window
// margin and demands bitwise equality.
std::map<std::vector<long long>, Rational> recorded;

Rational gz(const std::vector<long long>& parts) {
    const Rational v = gzeta_nonpos(Composition{parts});
    recorded[parts] = v;
    return v;
}

// All exponent vectors with parts in [min_part, 0], 1 <= depth <= max_depth.
std::vector<std::vector<long long>> nonpos_comps(int max_depth, long long min_part) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    const auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_depth) return;
        for (long long v = 0; v >= min_part; --v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

long long weight_of(const std::vector<long long>& parts) {
    long long w = 0;
    for (long long p : parts) w += p < 0 ? -p : p;
    return w;
}

bool check_stuffle_identity(const std::vector<long long>& a, const std::vector<long long>& b) {
    const Rational lhs = gz(a) * gz(b);
    Rational rhs(0);
    for (const auto& [w, c] : stuffle_exponents(Composition{a}, Composition{b})) {
        rhs += c * gz(w.parts);
    }
    return lhs == rhs;
}

Word random_nonpos_word(std::mt19937& rng, int max_depth, long long max_weight) {
    std::uniform_int_distribution<int> depth_pick(1, max_depth);
    const int depth = depth_pick(rng);
    std::vector<Letter> ls;
    long long left = max_weight;
    for (int i = 0; i < depth; ++i) {
        std::uniform_int_distribution<long long> part(0, std::min<long long>(3, left));
        const long long s = -part(rng);
        left -= -s;
        std::uniform_int_distribution<int> cpick(0, 3);
        std::uniform_int_distribution<int> mpick(0, 2);
        int c = cpick(rng);
        int m = mpick(rng);
        if (c == 0 && m == 0) c = 1;
        ls.push_back(Letter{s, Direction(Rational(c), Rational(m))});
    }
    return Word(std::move(ls));
}

LaurentSeries random_series(std::mt19937& rng, Window w) {
    std::uniform_int_distribution<long long> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 3);
    std::uniform_int_distribution<int> dpow(0, 2);
    LaurentSeries s(w);
    for (int k = w.lo; k <= w.hi; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(dpow(rng)) + 1);
        for (auto& x : c) x = Rational(num(rng), den(rng));
        s.set_coeff(k, RatFunc(Poly(std::move(c))));
    }
    return s;
}

bool criterion1() {
    bool ok = true;
    for (long long n = 0; n <= 20; ++n) {
        const Rational expect = Rational(parity_sign(n)) * bernoulli(static_cast<unsigned>(n + 1))
                                / Rational(n + 1);
        ok = ok && gz({-n}) == expect;
    }
    return ok;
}

bool criterion2() {
    const std::vector<std::pair<std::vector<long long>, Rational>> anchors = {
        {{-1, -1}, Rational(1, 288)},      {{-1, -2}, Rational(-1, 240)},
        {{-2, -1}, Rational(-1, 240)},     {{-1, -3}, Rational(83, 64512)},
        {{-3, -1}, Rational(-71, 35840)},  {{-1, -4}, Rational(1, 504)},
        {{-2, -2}, Rational(0)},           {{-4, -4}, Rational(0)},
        {{-6, -6}, Rational(0)},           {{-3, -3}, Rational(1, 28800)},
        {{-5, -5}, Rational(1, 127008)},   {{-7, -7}, Rational(1, 115200)},
        {{-6, -5}, Rational(-691, 65520)},
    };
    bool ok = true;
    for (const auto& [parts, expect] : anchors) {
        ok = ok && gz(parts) == expect;
    }
    return ok;
}

bool criterion3() {
    bool ok = true;
    for (long long s1 = -6; s1 <= 0; ++s1) {
        for (long long s2 = -6; s2 <= 0; ++s2) {
            if (s1 == 0 && s2 == 0) continue;
            ok = ok && z2_closed_form(s1, s2) == gz({s1, s2});
        }
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    for (long long s1 = -8; s1 <= 0; ++s1) {
        for (long long s2 = -8; s2 <= 0; ++s2) {
            const long long sum = s1 + s2;
            if (sum >= 0 || sum % 2 == 0) continue;
            // Interior pairs: -zeta(s1+s2)/2.  The s2 = 0 edge carries the
            // boundary term of the iterated-limit continuation formula,
            // which the quasi-shuffle relation independently forces.
            ok = ok && gz({s1, s2}) == parity_identity(s1, s2);
            if (s2 != 0) {
                ok = ok && parity_identity(s1, s2) == Rational(-1, 2) * zeta_nonpositive(sum);
            }
        }
    }
    return ok;
}

bool criterion5() {
    const auto comps = nonpos_comps(3, -4);
    bool ok = true;
    int instances = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i; j < comps.size(); ++j) {
            const auto& a = comps[i];
            const auto& b = comps[j];
            if (a.size() + b.size() > 4) continue;
            if (weight_of(a) + weight_of(b) > 10) continue;
            ok = ok && check_stuffle_identity(a, b);
            ++instances;
        }
    }
    return ok && instances > 500;
}

bool criterion6() {
    std::mt19937 rng(20240517);
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        const Word w = random_nonpos_word(rng, 4, 8);
        const Window win{-(pole_bound(w) + window_margin()), 2};
        ok = ok && phi_plus(w, win) == phi_plus_closed(w, win);
    }
    std::mt19937 rng2(424242);
    for (int i = 0; i < 50; ++i) {
        const Word a = random_nonpos_word(rng2, 3, 6);
        const Word b = random_nonpos_word(rng2, 3, 6);
        ok = ok && quasi_shuffle(a, b) == stuffle_oracle(a, b);
    }
    return ok;
}

bool criterion7() {
    const auto dirs = [](std::vector<long long> v) {
        return std::vector<Rational>(v.begin(), v.end());
    };
    const Composition zz{{0, 0}};
    bool ok = gzeta_symmetrized(zz, dirs({1, 2})) == Rational(3, 4)
           && gzeta_symmetrized(zz, dirs({3, 5})) == Rational(3, 4)
           && gzeta_symmetrized(zz, dirs({2, 2})) == Rational(3, 4);

    const Composition zzz{{0, 0, 0}};
    const Rational a = gzeta_symmetrized(zzz, dirs({1, 2, 3}));
    const Rational b = gzeta_symmetrized(zzz, dirs({2, 5, 7}));
    const Rational c = gzeta_symmetrized(zzz, dirs({1, 1, 2}));
    ok = ok && a == b && a == c;
    ok = ok && a == Rational(6) * gzeta_nonpos(zzz);
    return ok;
}

bool criterion8() {
    bool ok = gzeta_positive(Composition{{1}}) == SymbolicValue::t_power(1);

    SymbolicValue v11;
    v11.add_term(2, Composition{}, Rational(1, 2));
    v11.add_term(0, Composition{{2}}, Rational(-1, 2));
    ok = ok && gzeta_positive(Composition{{1, 1}}) == v11;

    // gz(1,2) + z(2,1) + z(3) = z(2) T.
    SymbolicValue lhs = gzeta_positive(Composition{{1, 2}});
    lhs.add_term(0, Composition{{2, 1}}, Rational(1));
    lhs.add_term(0, Composition{{3}}, Rational(1));
    SymbolicValue tz2;
    tz2.add_term(1, Composition{{2}}, Rational(1));
    ok = ok && lhs == tz2;

    std::mt19937 rng(777777);
    std::uniform_int_distribution<long long> front(2, 5);
    std::uniform_int_distribution<long long> rest(1, 4);
    std::uniform_int_distribution<std::size_t> d(1, 4);
    for (int i = 0; i < 10; ++i) {
        std::vector<long long> parts{front(rng)};
        const std::size_t depth = d(rng);
        for (std::size_t k = 1; k < depth; ++k) parts.push_back(rest(rng));
        ok = ok && gzeta_positive(Composition{parts}) == SymbolicValue::symbol(Composition{parts});
    }

    // Homomorphism on positive words of combined depth <= 4.
    std::vector<std::vector<long long>> comps;
    std::vector<long long> cur;
    const auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) comps.push_back(cur);
        if (cur.size() == 3) return;
        for (long long v = 1; v <= 3; ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i; j < comps.size(); ++j) {
            const auto& a = comps[i];
            const auto& b = comps[j];
            if (a.size() + b.size() > 4) continue;
            const SymbolicValue prod =
                symbolic_mul(gzeta_positive(Composition{a}), gzeta_positive(Composition{b}));
            SymbolicValue sum;
            for (const auto& [w, c] : stuffle_exponents(Composition{a}, Composition{b})) {
                sum += gzeta_positive(w).scaled(c);
            }
            ok = ok && prod == sum;
        }
    }
    return ok;
}

bool criterion9() {
    std::mt19937 rng(31337);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        const LaurentSeries a = random_series(rng, Window{-3, 3});
        const LaurentSeries b = random_series(rng, Window{-3, 3});
        const LaurentSeries lhs = a.pole_part() * b.pole_part();
        const LaurentSeries rhs = (a * b.pole_part()).pole_part()
                                + (a.pole_part() * b).pole_part()
                                - (a * b).pole_part();
        ok = ok && lhs == rhs;
        ok = ok && a.pole_part().pole_part() == a.pole_part();
    }
    return ok;
}

bool criterion10() {
    if (recorded.empty()) return false;
    setenv("MZV_WINDOW_MARGIN", "4", 1);
    bool ok = window_margin() == 4;
    for (const auto& [parts, value] : recorded) {
        if (gzeta_nonpos(Composition{parts}) != value) {
            ok = false;
            break;
        }
    }
    unsetenv("MZV_WINDOW_MARGIN");
    return ok && window_margin() == 0;
}

bool criterion11() {
    const double tol = 1e-8;
    const double z21 = mzv_numeric(Composition{{2, 1}}, tol);
    const double z3 = mzv_numeric(Composition{{3}}, tol);
    bool ok = std::abs(z21 - z3) < 1e-6;

    const double v11 = numeric_value(gzeta_positive(Composition{{1, 1}}), 0.0, tol);
    const double z2 = mzv_numeric(Composition{{2}}, tol);
    ok = ok && std::abs(v11 + z2 / 2) < 1e-6;
    return ok;
}

} // namespace

int main() {
    criterion(1, "depth-1 values match the Bernoulli closed form (n = 0..20)", criterion1);
    criterion(2, "depth-2 table anchors are reproduced exactly", criterion2);
    criterion(3, "depth-2 closed form equals the pipeline on [-6,0]^2", criterion3);
    criterion(4, "parity identity on [-8,0]^2 (s2 = 0 boundary term included)", criterion4);
    criterion(5, "quasi-shuffle homomorphism on non-positive words", criterion5);
    criterion(6, "recursive/closed-form and product/surjection oracle agreement", criterion6);
    criterion(7, "symmetrized limits are direction-independent", criterion7);
    criterion(8, "positive-path symbolic values and homomorphism", criterion8);
    criterion(9, "Rota-Baxter weight -1 and projector idempotence", criterion9);
    criterion(10, "all recorded values stable under window margin +4", criterion10);
    criterion(11, "numeric cross-checks within 1e-6", criterion11);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 11 criteria passed" << std::endl;
    return 0;
}
