#include "mzv/bernoulli.hpp"

#include <vector>

namespace mzv {

namespace {

// Akiyama-Tanigawa transform.  Row zero is 1/(j+1); each pass applies
// a_j <- (j+1) * (a_j - a_{j+1}) and reads off one number from column zero.
// The transform natively produces the x / (1 - e^{-x}) convention; the
// (-1)^n twist converts to x / (e^x - 1), which only flips n = 1.
std::vector<Rational> akiyama_tanigawa(unsigned n) {
    std::vector<Rational> row(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        row[j] = Rational(1, static_cast<long long>(j) + 1);
    }
    std::vector<Rational> out(n + 1);
    out[0] = row[0];
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 0; j + i <= n; ++j) {
            row[j] = Rational(static_cast<long long>(j) + 1) * (row[j] - row[j + 1]);
        }
        out[i] = (i % 2 == 0) ? row[0] : -row[0];
    }
    return out;
}

} // namespace

Rational bernoulli(unsigned n) {
    thread_local std::vector<Rational> cache;
    if (n >= cache.size()) {
        // Grow in blocks; the transform cost is quadratic in the table size.
        cache = akiyama_tanigawa(n + 16);
    }
    return cache[n];
}

Rational zeta_nonpositive(long long s) {
    if (s > 0) {
        throw DomainError("zeta_nonpositive requires s <= 0");
    }
    const long long i = -s;
    Rational b = bernoulli(static_cast<unsigned>(i + 1));
    return Rational(parity_sign(i)) * b / Rational(i + 1);
}

} // namespace mzv
