#pragma once

#include <complex>

#include "fracspline/complex_order.hpp"

namespace fracspline {

// Euler gamma function on C \ {0,-1,-2,...}, Lanczos approximation (g = 7,
// 9 terms) with the reflection formula for Re z < 0.5. Relative accuracy is
// better than 1e-12 for |z| <= 50. Arguments within 1e-12 of a nonpositive
// integer raise PoleError.
cplx gamma(cplx z);

// 1/Gamma(z), entire: exact 0 at nonpositive integers, stable near poles.
cplx rgamma(cplx z);

// Generalized binomial coefficient Gamma(z+1) / (Gamma(z-k+1) Gamma(k+1)),
// computed by the falling-factorial recurrence so that integer z truncates
// exactly (binom(n, k) == 0 for k > n, bit-exact).
cplx binom(cplx z, unsigned k);

// Truncated power x_+^w: 0 for x < 0, e^{w ln x} for x > 0. At x = 0 the
// value is 0 for Re w > 0 and 1 for w == 0; otherwise SingularAtZero.
// Small nonnegative integer exponents are evaluated by repeated
// multiplication, which keeps integer-order spline sums exact.
cplx trunc_pow(double x, cplx w);

// Fractional-integration kernel K_z(x) = x_+^{z-1} / Gamma(z), Re z > 0.
cplx kernel_K(cplx z, double x);

// Neumaier-compensated accumulator for complex sums with heavy cancellation.
class CompensatedSum {
public:
    void add(cplx term) {
        add_part(sum_re_, c_re_, term.real());
        add_part(sum_im_, c_im_, term.imag());
    }
    cplx value() const { return {sum_re_ + c_re_, sum_im_ + c_im_}; }

private:
    static void add_part(double& s, double& c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double sum_re_ = 0, sum_im_ = 0, c_re_ = 0, c_im_ = 0;
};

} // namespace fracspline
