#pragma once

#include "mzv/rational.hpp"

namespace mzv {

// B_n in the convention with generating function x / (e^x - 1),
// so B_1 = -1/2 and B_n = 0 for odd n >= 3.  Memoized per thread.
Rational bernoulli(unsigned n);

// zeta(s) for integer s <= 0:  zeta(-i) = (-1)^i B_{i+1} / (i+1).
// In particular zeta(0) = -1/2 and zeta(-2i) = 0 for i >= 1.
Rational zeta_nonpositive(long long s);

} // namespace mzv
