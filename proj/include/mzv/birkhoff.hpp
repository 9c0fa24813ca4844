#pragma once

#include "mzv/zreg.hpp"

namespace mzv {

// All ordered compositions (i_1, ..., i_p) of k, i_j >= 1; there are
// 2^(k-1) of them, emitted in a fixed deterministic order.
std::vector<std::vector<int>> compositions_of(int k);

// Counterterm character, defined by
//   phi_minus(x) = -P( Z(x) + sum over proper splits x' x'' of
//                      phi_minus(x') * Z(x'') )
// with P the minimal-subtraction projector.  The result is a pure pole
// part.  Memoized per word; any window is served since a pole part is
// exactly zero at k >= 0 and below the policy floor.
LaurentSeries phi_minus(const Word& w, Window win);

// Renormalized character, the complementary half:
//   phi_plus(x) = (id - P)( Z(x) + sum phi_minus(x') * Z(x'') ).
// A power series (zero at every e^k, k < 0); internally computed with a
// floor deep enough for the subtraction, so any window is served.
LaurentSeries phi_plus(const Word& w, Window win);

// Closed form for phi_plus as a sum over ordered compositions of the
// word into consecutive segments (first segment innermost):
//   sum over (i_1..i_p) of
//     (id-P)( Z(seg_p) * (-P)( Z(seg_{p-1}) * ... (-P)(Z(seg_1)) ... ) ).
// Independent oracle for phi_plus; requires win.lo <= -(weight+depth) so
// every intermediate slice stays above the pole order.
LaurentSeries phi_plus_closed(const Word& w, Window win);

struct BirkhoffResult {
    LaurentSeries minus;
    LaurentSeries plus;
};
BirkhoffResult birkhoff_decompose(const Word& w, Window win);

// Value of the renormalized character at e^0: a rational function of d.
// Uses the policy window for the word.
RatFunc zeta_directional(const Word& w);

} // namespace mzv
