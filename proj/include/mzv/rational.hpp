#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mzv/errors.hpp"

namespace mzv {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational scalar, always in canonical form:
// gcd(num, den) == 1 and den > 0.  Backed by boost::multiprecision.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}
    Rational(Integer num, Integer den);

    // Parses "p", "-p", or "p/q".
    static Rational parse(const std::string& text);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integer exponent; negative exponents invert, 0^e for e<0 throws.
    Rational pow(long long e) const;

    Rational abs() const { return v_ < 0 ? Rational(-*this) : *this; }

    double to_double() const { return v_.convert_to<double>(); }
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational v_;
};

Integer factorial(unsigned n);

// C(n, k) for n >= 0, 0 <= k <= n.
Integer binomial(long long n, long long k);

// (-1)^e for any integer e.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace mzv
