#pragma once

#include <complex>
#include <functional>

#include "fracspline/complex_order.hpp"

namespace fracspline {

using Integrand = std::function<cplx(double)>;

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300;
    int max_intervals = 4000;
};

// Adaptive Gauss-Kronrod (G7/K15) on [a, b] for a smooth integrand.
cplx integrate_adaptive(const Integrand& f, double a, double b,
                        const QuadOptions& opts = {});

// int_a^b (t-a)^w f(t) dt with Re w > -1 and f smooth on (a, b].
// For Re w < 0 the endpoint is regularized by t = a + v^{1/p}, p = 1 + Re w,
// which leaves only a bounded log-oscillatory factor at v = 0; panels are
// then refined dyadically toward the endpoint. Deterministic for fixed input.
cplx integrate_singular(const Integrand& f, double a, double b, cplx w,
                        const QuadOptions& opts = {});

} // namespace fracspline
