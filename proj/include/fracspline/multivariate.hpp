#pragma once

#include <span>
#include <vector>

#include "fracspline/complex_order.hpp"
#include "fracspline/grid.hpp"
#include "fracspline/report.hpp"
#include "fracspline/test_function.hpp"

namespace fracspline {

// Unit direction in R^s with separated projected knots.
struct Direction {
    std::vector<double> lambda;

    explicit Direction(std::vector<double> v);
};

// Multivariate B-spline of complex order on the equidistant ray d*N0,
// weights e.
struct EquidistantRay {
    std::vector<double> d;
    cplx order;

    EquidistantRay(std::vector<double> d_, cplx z);
    int dim() const { return static_cast<int>(d.size()); }
};

// Fourier form ((1 - e^{-i<lambda,d> w}) / (i w))^z at omega = w * lambda.
// At omega = 0 the limit is taken along the ray direction, <d/|d|, d>^z.
cplx mv_freq(const EquidistantRay& ray, std::span<const double> omega);

// Time-domain series with the stated prefactor, verbatim. The Fourier
// cross-check fits a single global constant; see mv_time_vs_idft_check.
cplx mv_time(const EquidistantRay& ray, std::span<const double> x, int max_terms = 20000);

struct MvCalibration {
    cplx constant = 1.0;   // fitted C with idft ~= C * series
    double residual = 0.0; // max |C * series - idft| over the probe points
    cplx closed_form_candidate = 1.0;
};

// Inverse 2-d DFT of mv_freq against the time-domain series at interior
// probe points (s = 2). Any constant-prefactor mismatch is fitted, recorded,
// and the check passes when the series matches up to that single constant.
MvCalibration calibrate_mv_time(const EquidistantRay& ray, int fft_size = 2048,
                                double omega_max = 128.0);
VerificationReport mv_time_vs_idft_check(const EquidistantRay& ray);

// int_{R^s} g(<lambda,x>) B_z(x) dx  ==  int g(t) B_z(t | e, lambda tau) dt,
// the left side over a band-limited graded 2-d grid using the calibrated
// series, the right side through the univariate evaluator at projected knot
// spacing. Pass at 1e-3 relative.
VerificationReport ridge_consistency_check(const EquidistantRay& ray,
                                           const Direction& lambda,
                                           const TestFunction& g,
                                           const MvCalibration& cal);

// Exponential-spline symbol ((1 - e^{-(a+i w)})/(a+i w))^z; a = 0 reduces
// exactly to the cardinal spline symbol. NegativeA when a < 0.
cplx exp_spline_freq(double a, cplx z, double omega);

// Windowed (Hann) inverse Fourier transform of the exponential-spline
// symbol, sampled onto the requested grid.
SampledFunction exp_spline_time(double a, cplx z, const Grid& grid);

} // namespace fracspline
