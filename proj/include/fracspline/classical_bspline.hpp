#pragma once

#include <span>

namespace fracspline {

// Cardinal polynomial B-spline of order n (degree n-1, support [0, n]),
// Cox-de Boor recursion. B_2 is the hat function with B_2(1) = 1.
double cardinal_bspline(int n, double x);

// Normalized simplex-spline density over strictly increasing knots
// t_0 < ... < t_n (unit integral); this is the law of sum_j u_j t_j with u
// uniform on the standard simplex.
double mspline_density(std::span<const double> knots, double x);

} // namespace fracspline
