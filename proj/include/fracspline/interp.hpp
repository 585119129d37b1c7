#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "fracspline/grid.hpp"

namespace fracspline {

// Four-point cubic Lagrange interpolation on a uniform grid. Error is
// O(h^4 f'''') away from the edges; the outermost intervals fall back to the
// nearest interior stencil.
class CubicInterp {
public:
    CubicInterp() = default;
    CubicInterp(Grid g, std::vector<std::complex<double>> v)
        : grid_(g), values_(std::move(v)) {
        if (values_.size() != grid_.count || grid_.count < 4)
            throw DomainError("CubicInterp: need at least 4 samples matching the grid");
    }

    static CubicInterp sample(const std::function<std::complex<double>(double)>& f,
                              const Grid& g) {
        std::vector<std::complex<double>> v(g.count);
        for (std::size_t i = 0; i < g.count; ++i) v[i] = f(g.point(i));
        return CubicInterp(g, std::move(v));
    }

    std::complex<double> operator()(double x) const {
        double s = (x - grid_.start) / grid_.step;
        auto n = static_cast<std::ptrdiff_t>(std::floor(s));
        auto last = static_cast<std::ptrdiff_t>(grid_.count) - 1;
        // stencil [n-1, n+2] clamped into range
        std::ptrdiff_t i0 = n - 1;
        if (i0 < 0) i0 = 0;
        if (i0 > last - 3) i0 = last - 3;
        double u = s - static_cast<double>(i0); // in [~1, ~2] for interior points
        const auto* p = values_.data() + i0;
        double c0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
        double c1 = u * (u - 2.0) * (u - 3.0) / 2.0;
        double c2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
        double c3 = u * (u - 1.0) * (u - 2.0) / 6.0;
        return c0 * p[0] + c1 * p[1] + c2 * p[2] + c3 * p[3];
    }

    const Grid& grid() const { return grid_; }
    const std::vector<std::complex<double>>& values() const { return values_; }

private:
    Grid grid_;
    std::vector<std::complex<double>> values_;
};

} // namespace fracspline
