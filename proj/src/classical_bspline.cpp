#include "fracspline/classical_bspline.hpp"

#include <stdexcept>
#include <vector>

namespace fracspline {

double cardinal_bspline(int n, double x) {
    if (n < 1) throw std::invalid_argument("cardinal_bspline: order must be >= 1");
    if (x < 0.0 || x >= static_cast<double>(n)) return 0.0;
    // values of B_1(x - j) for j = 0..n-1, then Cox-de Boor upwards
    std::vector<double> v(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double t = x - j;
        v[j] = (t >= 0.0 && t < 1.0) ? 1.0 : 0.0;
    }
    for (int k = 2; k <= n; ++k) {
        for (int j = 0; j <= n - k; ++j) {
            double t = x - j;
            v[j] = (t * v[j] + (static_cast<double>(k) - t) * v[j + 1]) / (k - 1);
        }
    }
    return v[0];
}

double mspline_density(std::span<const double> knots, double x) {
    const int n = static_cast<int>(knots.size()) - 1; // spline order
    if (n < 1) throw std::invalid_argument("mspline_density: need at least 2 knots");
    for (int i = 0; i < n; ++i)
        if (!(knots[i] < knots[i + 1]))
            throw std::invalid_argument("mspline_density: knots must be strictly increasing");
    if (x < knots[0] || x >= knots[n]) return 0.0;

    // M_{i,1} = 1/(t_{i+1}-t_i) on [t_i, t_{i+1})
    std::vector<double> m(n, 0.0);
    for (int i = 0; i < n; ++i)
        m[i] = (x >= knots[i] && x < knots[i + 1]) ? 1.0 / (knots[i + 1] - knots[i]) : 0.0;
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i + k <= n; ++i) {
            double num = (x - knots[i]) * m[i] + (knots[i + k] - x) * m[i + 1];
            m[i] = (static_cast<double>(k) / (k - 1)) * num / (knots[i + k] - knots[i]);
        }
    }
    return m[0];
}

} // namespace fracspline
