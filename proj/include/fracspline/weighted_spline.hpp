#pragma once

#include "fracspline/dirichlet.hpp"
#include "fracspline/grid.hpp"
#include "fracspline/report.hpp"

namespace fracspline {

struct DensityEstimate {
    SampledFunction density; // real-valued up to estimator noise
    double bandwidth = 0.0;
    std::size_t samples = 0;
};

// Gaussian-kernel density estimate of the law of X = sum_j tau^j U_j under
// the Dirichlet weights b. bandwidth <= 0 selects Silverman's rule. The grid
// covers the knot hull extended by five bandwidths so the estimate integrates
// to ~1 on it.
DensityEstimate estimate_density(const WeightVector& b, const KnotVector& tau,
                                 std::size_t samples, double bandwidth,
                                 const McConfig& cfg, std::size_t grid_count = 512);

// B-spline of complex order with weights b and scalar knots tau, realized
// through the density of X; the defining integral pairing is verified against
// the Dirichlet average rather than asserted in closed form.
struct WeightedSpline {
    cplx order;
    WeightVector weights;
    KnotVector knots;
    DensityEstimate density;
    double growth_proxy = 0.0;

    WeightedSpline(cplx z, WeightVector b, KnotVector tau, std::size_t samples,
                   const McConfig& cfg);
};

// int B_z(t | b; tau) D^z g(t) dt == int D^z g(tau . u) dmu_b(u), left side
// through the density estimate, right side by Monte Carlo. KDE bias dominates:
// pass within max(2e-2 * scale, 3 sigma).
VerificationReport defining_identity_check(const WeightedSpline& spline,
                                           const TestFunction& g, const McConfig& cfg);

// Integer-order cases against classical densities: e-weights against the
// simplex spline (Cox-de Boor), non-uniform weights against a brute-force
// projection-density quadrature. DimensionTooHigh beyond 4 knots for the
// quadrature path.
VerificationReport dirichlet_spline_integer_check(const WeightVector& b,
                                                  const KnotVector& tau, int n,
                                                  const McConfig& cfg);

// Exact projection density of X = sum u_j tau_j under Dirichlet(b) for up to
// 4 scalar knots (recursive Beta mixture).
double dirichlet_projection_density(const WeightVector& b, const KnotVector& tau,
                                    double x);

} // namespace fracspline
