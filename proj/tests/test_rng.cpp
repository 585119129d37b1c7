#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracspline/rng.hpp"

using namespace fracspline;

TEST_CASE("rng: same (seed, stream) reproduces the sequence") {
    Rng a(42, 3), b(42, 3);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("rng: distinct streams differ") {
    Rng a(42, 0), b(42, 1);
    int same = 0;
    for (int i = 0; i < 100; ++i)
        if (a.next_u64() == b.next_u64()) ++same;
    CHECK(same == 0);
}

TEST_CASE("rng: adjacent streams are empirically uncorrelated") {
    const int n = 100000;
    Rng a(7, 0), b(7, 1);
    double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
    for (int i = 0; i < n; ++i) {
        double x = a.uniform01(), y = b.uniform01();
        sa += x;
        sb += y;
        sab += x * y;
        saa += x * x;
        sbb += y * y;
    }
    double ma = sa / n, mb = sb / n;
    double corr = (sab / n - ma * mb) /
                  std::sqrt((saa / n - ma * ma) * (sbb / n - mb * mb));
    CHECK(std::abs(corr) < 0.01);
}

TEST_CASE("rng: Kolmogorov-Smirnov against U(0,1)") {
    const int n = 100000;
    Rng rng(7, 5);
    std::vector<double> u(n);
    for (auto& v : u) v = rng.uniform01();
    std::sort(u.begin(), u.end());
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        d = std::max(d, std::abs((i + 1.0) / n - u[i]));
        d = std::max(d, std::abs(u[i] - static_cast<double>(i) / n));
    }
    CHECK(d < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("rng: uniform01 stays inside the open interval") {
    Rng rng(1, 1);
    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform01();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("rng: gamma draws match first two moments") {
    const int n = 200000;
    for (double shape : {0.5, 1.0, 2.5}) {
        Rng rng(9, 77);
        double s = 0, s2 = 0;
        for (int i = 0; i < n; ++i) {
            double g = rng.gamma_draw(shape);
            s += g;
            s2 += g * g;
        }
        double mean = s / n;
        double var = s2 / n - mean * mean;
        // mean = shape, var = shape; allow 4 sigma of the estimators
        double se_mean = std::sqrt(shape / n);
        CHECK(std::abs(mean - shape) < 4.5 * se_mean);
        CHECK(std::abs(var - shape) / shape < 0.05);
    }
}
