#pragma once

#include <functional>
#include <vector>

#include "fracspline/complex_order.hpp"
#include "fracspline/interp.hpp"
#include "fracspline/report.hpp"
#include "fracspline/test_function.hpp"

namespace fracspline {

// Order bookkeeping for the differintegral operators: m = ceil(Re z) and
// nu = m - z (so nu = 0 exactly when z is a positive integer). When Re z sits
// on an integer with Im z != 0 the ceiling split leaves Re nu = 0, whose
// weight t^{nu-1} is not integrable; one extra derivative order gives the
// identical operator with an integrable weight.
struct FracOrder {
    cplx z;
    int m;
    cplx nu;

    explicit FracOrder(cplx z_) : z(ComplexOrder::fractional(z_).value()) {
        m = static_cast<int>(std::ceil(z.real()));
        nu = static_cast<double>(m) - z;
        if (std::abs(nu) < 1e-8) {
            nu = 0.0; // integer collapse
        } else if (nu.real() < 1e-8) {
            m += 1;
            nu += 1.0;
        }
    }
};

// Right-sided fractional integral (D^{-z} f)(x) = (1/Gamma(z)) int_0^inf
// t^{z-1} f(x+t) dt, truncated at `window` once the tail estimate drops below
// 1e-12 of the head. The window doubles automatically up to three times;
// TailNotNegligible if the decay check still fails.
cplx frac_integral(const TestFunction& f, const FracOrder& z, double x,
                   double window = 40.0);
cplx frac_integral_fn(const std::function<cplx(double)>& f, const FracOrder& z,
                      double x, double window = 40.0);

// Right-sided fractional derivative of complex order,
//   (D^z f)(x) = (-1)^m (1/Gamma(nu)) int_0^inf t^{nu-1} f^(m)(x+t) dt,
// the derivative-inside form. Integer z collapses to (-1)^m f^(m)(x).
// The (-1)^m factor makes D^z D^{-z} = id hold for every order; see the
// operator notes in the README.
cplx frac_derivative(const TestFunction& f, const FracOrder& z, double x,
                     double window = 40.0);

// D^z f sampled on [lo, hi] with the given step, cubic-interpolated.
CubicInterp frac_derivative_grid(const TestFunction& f, const FracOrder& z,
                                 double lo, double hi, double step = 1.0 / 256.0,
                                 double window = 40.0);

// D^{-(z1+z2)} f versus D^{-z1}(D^{-z2} f); the inner operator is evaluated
// on a dense grid of step 1/256 and cubic-interpolated. Pass at 1e-6.
VerificationReport semigroup_check(const TestFunction& f, const FracOrder& z1,
                                   const FracOrder& z2,
                                   const std::vector<double>& points);

// D^z (D^{-z} f) recovers f; pass at 1e-5.
VerificationReport inverse_check(const TestFunction& f, const FracOrder& z,
                                 const std::vector<double>& points);

// Weak delta pair: <D^z K_z(. - k), phi> = phi(k), the adjoint pairing moving
// D^z onto phi. Pass at 1e-5.
VerificationReport delta_pair_check(cplx z, int k, const TestFunction& phi);

// (K_{z1} * K_{z2})(x) against K_{z1+z2}(x) at the given points (the Beta
// integral in disguise). Pass at 1e-8.
VerificationReport kernel_semigroup_check(cplx z1, cplx z2,
                                          const std::vector<double>& points);

} // namespace fracspline
