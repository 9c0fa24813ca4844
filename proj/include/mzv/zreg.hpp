#pragma once

#include "mzv/hopf.hpp"
#include "mzv/laurent.hpp"

namespace mzv {

// Extra window padding, read from the MZV_WINDOW_MARGIN environment
// variable (integer, default 0).  Used by the stability checks.
int window_margin();

// Policy window for a non-positive word: [-(weight+depth+margin),
// +(weight+depth+margin)].  weight+depth bounds the pole order of every
// series derived from the word, so policy windows always contain the
// complete pole part.
Window default_window(const Word& w);
int pole_bound(const Word& w);

// Truncated regularized-sum expansion for one letter (s | r), s <= 0:
//   (-1)^(s-1) * (-s)! * (r e)^(s-1)  +  sum_{j>=0} zeta(s-j) (r e)^j / j!
// filled over the requested window.  Requires win.lo <= s-1 so the pole
// coefficient is claimed; everything below the pole is exactly zero.
LaurentSeries z_depth1(long long s, const Direction& r, Window win);

// Regularized-sum expansion of a non-positive word, by repeatedly
// absorbing the first letter into the second:
//   Z(s1,s2,...|r1,r2,...) = sum_{j=0}^{-s1} C(-s1,j) Z(-j|r1)
//                            * Z(s1+s2+j, s3,... | r1+r2, r3,...).
// Results are memoized per word at its policy floor and served to any
// requested window (zero-fill below the floor is exact by the pole
// bound).  Requires win.lo <= -(weight+depth).
LaurentSeries z_nonpos(const Word& w, Window win);

// Multiplicativity of the regularized sums: compares
// z_nonpos(a) * z_nonpos(b) with the quasi-shuffle expansion
// sum of z_nonpos over the terms of a * b, as series on the combined
// policy window.
bool z_quasi_shuffle_check(const Word& a, const Word& b);

} // namespace mzv
