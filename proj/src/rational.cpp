#include "mzv/rational.hpp"

#include <ostream>
#include <sstream>

namespace mzv {

Rational::Rational(Integer num, Integer den) {
    if (den.is_zero()) {
        throw DivisionByZero("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("cannot parse rational: " + text);
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long long e) const {
    if (e == 0) {
        return Rational(1);
    }
    if (is_zero()) {
        if (e < 0) {
            throw DivisionByZero("negative power of zero");
        }
        return Rational(0);
    }
    const bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-e)
                                  : static_cast<unsigned long long>(e);
    Rational base = *this;
    Rational acc(1);
    while (k != 0) {
        if (k & 1ULL) {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    if (invert) {
        return Rational(1) / acc;
    }
    return acc;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Integer factorial(unsigned n) {
    Integer acc(1);
    for (unsigned i = 2; i <= n; ++i) {
        acc *= i;
    }
    return acc;
}

Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("binomial arguments out of range");
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer acc(1);
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

} // namespace mzv
