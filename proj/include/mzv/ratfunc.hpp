#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Univariate polynomial over Rational in the direction parameter d.
// Canonical form: no trailing zero coefficients; zero is the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    // The monomial d.
    static Poly variable();

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of d^i (zero outside the stored range).
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Quotient and remainder with deg(rem) < deg(div); div must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Monic greatest common divisor; gcd(0, 0) == 0.
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;
    Rational evaluate(const Rational& x) const;
    std::string str(const std::string& var = "d") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Rational function num/den over Rational in d, always canonical:
// gcd(num, den) == 1, den monic and nonzero; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)), factored_(true) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)), factored_(true) {}
    RatFunc(long long c) : RatFunc(Rational(c)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)), factored_(true) {}
    RatFunc(Poly num, Poly den);

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Value at d = x; throws PoleAtZero when the denominator vanishes there.
    Rational evaluate(const Rational& x) const;

    std::string str(const std::string& var = "d") const;

private:
    // Builds num/den with den already monic and den == prod (d + q)^e over
    // f; cancels shared linear factors by root tests and returns the
    // canonical result with its factorization attached.
    static RatFunc reduced_factored(Poly num, Poly den,
                                    std::vector<std::pair<Rational, int>> f);
    void recognize_factors();

    Poly num_, den_;
    // Factorization of den_ into monic linear factors when one is known:
    // factored_ set means den_ == prod (d + q)^e over denf_, sorted by q
    // with positive exponents.  Every denominator the evaluation pipeline
    // builds is such a product (depth-1 seeds contribute powers of one
    // linear form and arithmetic only combines them), and reducing against
    // linear factors needs one Horner pass each, so the arithmetic
    // operators can bypass the general gcd whenever both operands carry a
    // factorization.
    std::vector<std::pair<Rational, int>> denf_;
    bool factored_ = false;
};

// Value of f at d = 0.  Cancels num/den first (canonical form), so a
// removable singularity never reaches this point; throws PoleAtZero when
// the reduced denominator vanishes at 0.
Rational eval_at_delta_zero(const RatFunc& f);

} // namespace mzv
