#include "mzv/mzv_numeric.hpp"

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

// Sum over n > m of n^{-s} for integer s >= 2.  Direct summation of the
// first 48 terms, then Euler-Maclaurin with corrections through B_8; the
// first omitted term is below 1e-19 in absolute value.
// n^e by binary exponentiation; for integer exponents this is both faster
// and more accurate than powl.
long double ipow(long double n, long long e) {
    long double r = 1.0L;
    while (e > 0) {
        if (e & 1) r *= n;
        n *= n;
        e >>= 1;
    }
    return r;
}

long double zeta_tail(long long s, long long m) {
    constexpr long long kDirect = 48;
    long double sum = 0.0L;
    for (long long n = m + 1; n <= m + kDirect; ++n) {
        sum += powl(static_cast<long double>(n), -static_cast<long double>(s));
    }
    const long double a = static_cast<long double>(m + kDirect + 1);
    const long double sd = static_cast<long double>(s);
    const long double p1 = sd;
    const long double p3 = sd * (sd + 1) * (sd + 2);
    const long double p5 = p3 * (sd + 3) * (sd + 4);
    const long double p7 = p5 * (sd + 5) * (sd + 6);
    sum += powl(a, 1 - sd) / (sd - 1);
    sum += 0.5L * powl(a, -sd);
    sum += p1 / 12.0L * powl(a, -sd - 1);
    sum -= p3 / 720.0L * powl(a, -sd - 3);
    sum += p5 / 30240.0L * powl(a, -sd - 5);
    sum -= p7 / 1209600.0L * powl(a, -sd - 7);
    return sum;
}

} // namespace

double mzv_numeric(const Composition& s, double tol) {
    if (!(tol >= 1e-12)) {
        throw DomainError("mzv_numeric: tol must be at least 1e-12");
    }
    if (!s.convergent()) {
        throw DomainError("mzv_numeric: composition must have s_1 >= 2 and s_i >= 1");
    }
    const std::size_t k = s.depth();
    if (k == 1) {
        return static_cast<double>(zeta_tail(s.parts[0], 0));
    }

    // sigma[j] = s_1 + ... + s_j (1-based); convergence gives sigma[j] > j.
    std::vector<long long> sigma(k + 1, 0);
    for (std::size_t j = 1; j <= k; ++j) {
        sigma[j] = sigma[j - 1] + s.parts[j - 1];
    }

    // Integral bounds: the partial value below level j is at most
    // c_j * lo^{j - sigma_j} with c_1 = 1/(s_1 - 1), c_j = c_{j-1}/(sigma_j - j).
    std::vector<long double> c(k + 1, 0.0L);
    c[1] = 1.0L / static_cast<long double>(s.parts[0] - 1);
    for (std::size_t j = 2; j <= k; ++j) {
        c[j] = c[j - 1] / static_cast<long double>(sigma[j] - j);
    }

    // Truncation budget per level, discounted by a harmonic-sum bound for
    // the enclosing partial sums (each bounded by 1 + ln N <= 40 here).
    constexpr long double kHarmonicBound = 40.0L;
    constexpr std::int64_t kWorkBudget = 300000000;
    std::vector<long long> cutoff(k + 1, 0);
    for (std::size_t j = 2; j <= k; ++j) {
        long double budget = 0.45L * static_cast<long double>(tol) /
                             (static_cast<long double>(k - 1) *
                              powl(kHarmonicBound, static_cast<long double>(k - j)));
        long double n = powl(c[j] / budget, 1.0L / static_cast<long double>(sigma[j] - j));
        if (!(n < static_cast<long double>(kWorkBudget))) {
            throw CertificationError("mzv_numeric: certified cutoff exceeds iteration budget");
        }
        cutoff[j] = static_cast<long long>(n) + 1;
    }

    // One downward sweep of simultaneous suffix-sum recurrences: G[j] holds
    // the level-j partial sum over (cutoff_j >= m > n), so
    //   G[j](n-1) = G[j](n) + n^{-s_j} * G[j-1](n),
    // committed top-down within each step so every update reads the lower
    // level's value at n.  G[1] is the untruncated zeta tail, seeded by
    // Euler-Maclaurin at the deepest cutoff and rolled down exactly.
    long long n_max = 0;
    for (std::size_t j = 2; j <= k; ++j) {
        n_max = std::max(n_max, cutoff[j]);
    }
    std::vector<long double> G(k + 1, 0.0L);
    G[1] = zeta_tail(s.parts[0], n_max);
    std::int64_t work = 0;
    for (long long n = n_max; n >= 1; --n) {
        for (std::size_t j = k; j >= 2; --j) {
            if (n > cutoff[j]) continue;
            if (++work > kWorkBudget) {
                throw CertificationError("mzv_numeric: iteration budget exhausted");
            }
            G[j] += G[j - 1] / ipow(static_cast<long double>(n), s.parts[j - 1]);
        }
        G[1] += 1.0L / ipow(static_cast<long double>(n), s.parts[0]);
    }
    return static_cast<double>(G[k]);
}

} // namespace mzv
