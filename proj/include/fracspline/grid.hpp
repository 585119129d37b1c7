#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracspline/errors.hpp"

namespace fracspline {

// Uniform real grid: points start + i*step, i in [0, count).
struct Grid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 2;

    Grid() = default;
    Grid(double start_, double step_, std::size_t count_)
        : start(start_), step(step_), count(count_) {
        if (!(step > 0.0)) throw DomainError("Grid: step must be > 0");
        if (count < 2) throw DomainError("Grid: count must be >= 2");
    }

    double point(std::size_t i) const { return start + static_cast<double>(i) * step; }
    double back() const { return point(count - 1); }

    // Smallest grid covering [a, b] with the given step.
    static Grid covering(double a, double b, double step_) {
        std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / step_)) + 1;
        return Grid(a, step_, n < 2 ? 2 : n);
    }
};

struct SampledFunction {
    Grid grid;
    std::vector<std::complex<double>> values;

    SampledFunction() = default;
    SampledFunction(Grid g, std::vector<std::complex<double>> v)
        : grid(g), values(std::move(v)) {
        if (values.size() != grid.count)
            throw DomainError("SampledFunction: values length must equal grid.count");
    }
};

} // namespace fracspline
