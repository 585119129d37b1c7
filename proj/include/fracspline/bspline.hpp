#pragma once

#include <vector>

#include "fracspline/complex_order.hpp"
#include "fracspline/grid.hpp"
#include "fracspline/report.hpp"

namespace fracspline {

// Symbol (1 - e^{-w}) / w with the removable singularity handled by a
// degree-6 Taylor expansion for |w| < 1e-4. Called with w = i*omega for the
// cardinal spline and w = a + i*omega for exponential splines.
cplx omega_symbol(cplx w);

struct SplineValue {
    cplx value;
    // Set when the running term magnitude exceeded 1e6 times the final sum
    // (catastrophic cancellation regime; the frequency-side evaluator is the
    // better choice there).
    bool accuracy_loss = false;

    operator cplx() const { return value; }
};

// Cardinal B-spline of complex order z, Re z > 1.
class ComplexBSpline {
public:
    explicit ComplexBSpline(cplx z);

    cplx order() const { return z_; }

    // Alternating truncated-power series; a finite sum over k < x.
    SplineValue time(double x) const;

    // Same value through the 1/(Gamma(z-k+1) Gamma(k+1)) coefficient route;
    // kept as an independent cross-check path.
    SplineValue time_alt(double x) const;

    // Principal-branch Omega(omega)^z with freq(0) == 1 exactly.
    cplx freq(double omega) const;

private:
    cplx z_;
};

struct PhaseFactors {
    cplx modulus_part; // spectrum of the real-order spline B_{Re z}
    cplx phase_part;   // e^{i Im z ln|Omega|}
    cplx damping_part; // e^{-Im z arg Omega}
};

// Factorization of freq(z, omega); LogSingularity at the zeros of Omega.
PhaseFactors phase_factorization(cplx z, double omega);

// Right side of the order-reduction recursion, evaluated through B_{z-1};
// requires Re z > 2 so the reduced order is still in the continuity regime.
cplx recursion_step(cplx z, double x);

// Discrete Riemann convolution of sampled B_{z1} and B_{z2} on the grid
// against sampled B_{z1+z2}; passes when the max discrepancy is <= 10*step.
VerificationReport convolve_check(cplx z1, cplx z2, const Grid& grid);

// sup over x in {10,20,40,80} of |B_z(x)| x^m stays bounded with consecutive
// ratios <= 2; valid for integer m < Re z + 1.
VerificationReport decay_check(cplx z, int m);

// Trapezoid inverse Fourier transform of Omega^z; test-grade evaluator used
// as the recommended fallback where the time series flags accuracy loss.
cplx bspline_time_via_inverse_ft(cplx z, double x, double omega_max = 2000.0,
                                 double domega = 0.02454369260617025967);

} // namespace fracspline
