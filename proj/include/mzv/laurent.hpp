#pragma once

#include <string>
#include <vector>

#include "mzv/ratfunc.hpp"

namespace mzv {

// Inclusive exponent range [lo, hi] of a truncated Laurent series in e.
struct Window {
    int lo;
    int hi;

    bool valid() const { return lo <= hi; }
    int length() const { return hi - lo + 1; }

    friend bool operator==(const Window&, const Window&) = default;
    friend auto operator<=>(const Window&, const Window&) = default;
};

// Truncated Laurent series in the regulator e with RatFunc coefficients.
// A series claims exact coefficients for every exponent in its window;
// outside the window nothing is claimed.  Every series this library
// constructs is also exactly zero below its window (scalars and the
// depth-one building blocks are built that way, and the pipeline's
// products preserve it), which is what makes the multiplication window
// rule below sound.
class LaurentSeries {
public:
    explicit LaurentSeries(Window w);

    static LaurentSeries zero(Window w) { return LaurentSeries(w); }
    // v placed at e^0 when 0 lies in the window, zeros elsewhere.
    static LaurentSeries scalar(const RatFunc& v, Window w);
    // v placed at e^k; k must lie inside the window.
    static LaurentSeries monomial(const RatFunc& v, int k, Window w);

    Window window() const { return w_; }
    int lo() const { return w_.lo; }
    int hi() const { return w_.hi; }

    // Coefficient of e^k; throws OutOfWindow outside the window.
    const RatFunc& coeff(int k) const;
    void set_coeff(int k, RatFunc v);

    bool is_zero() const;

    // Window of the sum is the intersection: claims only where both
    // operands claim.  Throws EmptyWindow when the windows are disjoint.
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;

    // Cauchy product on [lo_a + lo_b, min(lo_a + hi_b, lo_b + hi_a)]:
    // exactly the exponents whose convolution uses only claimed
    // coefficients, given that both operands vanish below their windows.
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scaled(const RatFunc& c) const;

    // Minimal-subtraction projector: zeroes every coefficient of e^k with
    // k >= 0; the window is unchanged.
    LaurentSeries pole_part() const;
    // Complement id - P: zeroes every coefficient of e^k with k < 0.
    LaurentSeries power_part() const;

    // Re-windowed copy: coefficients are copied where the windows overlap
    // and zero-filled elsewhere.  Only sound when the caller knows the
    // series is exactly zero on the newly claimed exponents (true below
    // the window for all pipeline series, and above it for pole parts
    // and scalars).
    LaurentSeries with_window(Window w) const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    std::string str() const;

private:
    Window w_;
    std::vector<RatFunc> c_; // c_[k - w_.lo] is the coefficient of e^k
};

// Contract-named aliases for the series operations.
inline LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
inline LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }
inline LaurentSeries project_pole(const LaurentSeries& a) { return a.pole_part(); }
inline LaurentSeries project_power(const LaurentSeries& a) { return a.power_part(); }
inline const RatFunc& coeff_at(const LaurentSeries& a, int k) { return a.coeff(k); }

} // namespace mzv
