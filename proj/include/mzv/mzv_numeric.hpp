#pragma once

#include "mzv/composition.hpp"

namespace mzv {

// Floating-point value of the nested sum
//   sum over n_1 > n_2 > ... > n_k > 0 of prod n_i^{-s_i}
// for a convergent composition (s_1 >= 2, s_i >= 1), with certified
// absolute error <= tol.  The outermost sum (over n_1) is evaluated by
// Euler-Maclaurin; inner sums are truncated at cutoffs derived from
// integral tail bounds.  Throws CertificationError when the certified
// cutoffs would exceed the iteration budget, DomainError on invalid
// input or tol < 1e-12.
double mzv_numeric(const Composition& s, double tol);

} // namespace mzv
