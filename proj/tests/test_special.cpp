#include <doctest.h>

#include <cmath>

#include "fracspline/errors.hpp"
#include "fracspline/rng.hpp"
#include "fracspline/special.hpp"

using namespace fracspline;

namespace {
double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
} // namespace

TEST_CASE("gamma: classical anchors") {
    CHECK(rel_err(gamma(1.0), 1.0) < 1e-14);
    CHECK(rel_err(gamma(0.5), 1.7724538509055160273) < 1e-13);
    CHECK(rel_err(gamma(5.0), 24.0) < 1e-13);
    CHECK(rel_err(gamma(-4.3), -0.10198078888343321098) < 1e-12);
}

TEST_CASE("gamma: high-precision reference values") {
    // frozen from an arbitrary-precision evaluation
    CHECK(rel_err(gamma(cplx(2.5, 1.0)),
                  cplx(0.77476210455108367117, 0.70763120437959258559)) < 1e-12);
    CHECK(rel_err(gamma(cplx(-2.5, 30.0)),
                  cplx(-1.1407672198331512958e-25, -2.9491569719633028125e-25)) < 1e-12);
    CHECK(rel_err(gamma(cplx(10.0, -3.0)),
                  cplx(197624.13894976546905, -113252.91895947161364)) < 1e-12);
    CHECK(rel_err(gamma(cplx(40.0, 20.0)),
                  cplx(7.4607475688847143062e+43, -1.382574724230929409e+44)) < 1e-12);
}

TEST_CASE("gamma: poles rejected") {
    CHECK_THROWS_AS(gamma(0.0), PoleError);
    CHECK_THROWS_AS(gamma(-1.0), PoleError);
    CHECK_THROWS_AS(gamma(cplx(-3.0, 1e-13)), PoleError);
    CHECK_NOTHROW(gamma(cplx(-3.0, 1e-3)));
}

TEST_CASE("gamma: recurrence and reflection properties") {
    Rng rng(11, 0);
    int tested = 0;
    while (tested < 200) {
        cplx z(-20.0 + 40.0 * rng.uniform01(), -20.0 + 40.0 * rng.uniform01());
        if (std::abs(z) > 20.0) continue;
        double r = std::round(z.real());
        if (r <= 0.5 && std::abs(z - cplx(r, 0.0)) < 0.1) continue;
        if (std::abs(z - cplx(std::round(z.real()), 0.0)) < 0.1) continue;
        ++tested;
        cplx lhs = gamma(z + 1.0);
        CHECK(std::abs(lhs - z * gamma(z)) / std::abs(lhs) < 1e-10);
        cplx refl = gamma(z) * gamma(1.0 - z) * std::sin(3.14159265358979323846 * z) /
                    3.14159265358979323846;
        CHECK(std::abs(refl - 1.0) < 1e-10);
    }
}

TEST_CASE("rgamma: zeros at nonpositive integers, consistent elsewhere") {
    CHECK(rgamma(0.0) == cplx(0.0));
    CHECK(rgamma(-7.0) == cplx(0.0));
    CHECK(rel_err(rgamma(cplx(2.5, 1.0)), 1.0 / gamma(cplx(2.5, 1.0))) < 1e-13);
    // stable right next to a pole
    cplx near = rgamma(cplx(-3.0, 1e-13));
    CHECK(std::abs(near) < 1e-11);
}

TEST_CASE("binom: anchors") {
    Rng rng(12, 0);
    for (int i = 0; i < 20; ++i) {
        cplx z(6.0 * rng.uniform01(), -3.0 + 6.0 * rng.uniform01());
        CHECK(binom(z, 0) == cplx(1.0));
    }
    CHECK(binom(3.0, 4) == cplx(0.0)); // exact zero beyond integer degree
    CHECK(binom(3.0, 7) == cplx(0.0));
    cplx z(2.5, 1.0);
    CHECK(rel_err(binom(z, 3), z * (z - 1.0) * (z - 2.0) / 6.0) < 1e-14);
    CHECK(rel_err(binom(z, 3), cplx(-0.4375, 0.79166666666666666667)) < 1e-14);
}

TEST_CASE("binom: Pascal recurrence") {
    Rng rng(13, 0);
    for (int i = 0; i < 50; ++i) {
        cplx z(-4.0 + 10.0 * rng.uniform01(), -4.0 + 8.0 * rng.uniform01());
        unsigned k = 1 + static_cast<unsigned>(rng.uniform01() * 12.0);
        cplx lhs = binom(z, k);
        cplx rhs = binom(z - 1.0, k) + binom(z - 1.0, k - 1);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("binom: partial absolute sums stay bounded up to 1e4 terms") {
    Rng rng(14, 0);
    for (int trial = 0; trial < 20; ++trial) {
        cplx z(1.0 + 4.0 * rng.uniform01(), -3.0 + 6.0 * rng.uniform01());
        if (std::abs(z) > 6.0) z /= std::abs(z) / 5.0;
        double bound = 1e3 * std::exp(std::abs(z - 1.0));
        double partial = 0.0;
        cplx coeff = 1.0;
        for (int k = 0; k < 10000; ++k) {
            double next = partial + std::abs(coeff);
            CHECK(next >= partial); // nondecreasing
            partial = next;
            CHECK(partial < bound);
            coeff *= (z - static_cast<double>(k)) / static_cast<double>(k + 1);
        }
        CHECK(std::isfinite(partial));
    }
}

TEST_CASE("trunc_pow: piecewise definition") {
    CHECK(trunc_pow(-2.0, cplx(1.5, 0.0)) == cplx(0.0));
    CHECK(trunc_pow(-1e-30, cplx(-0.5, 3.0)) == cplx(0.0));
    Rng rng(15, 0);
    for (int i = 0; i < 10; ++i) {
        cplx w(-3.0 + 6.0 * rng.uniform01(), -3.0 + 6.0 * rng.uniform01());
        CHECK(trunc_pow(1.0, w) == cplx(1.0));
    }
    CHECK(rel_err(trunc_pow(4.0, cplx(0.5, 1.0)),
                  cplx(0.36691394948660335368, 1.9660554808224874412)) < 1e-14);
    // exact at small integer exponents
    CHECK(trunc_pow(6.0, 4.0) == cplx(1296.0));
    CHECK(trunc_pow(0.0, 0.0) == cplx(1.0));
    CHECK(trunc_pow(0.0, cplx(0.5, 2.0)) == cplx(0.0));
    CHECK_THROWS_AS(trunc_pow(0.0, cplx(-0.5, 0.0)), SingularAtZero);
    CHECK_THROWS_AS(trunc_pow(0.0, cplx(0.0, 1.0)), SingularAtZero);
}

TEST_CASE("kernel_K: anchors") {
    CHECK(kernel_K(1.0, 2.5) == cplx(1.0));  // Heaviside
    CHECK(kernel_K(1.0, -2.5) == cplx(0.0));
    CHECK(rel_err(kernel_K(2.0, 3.0), 3.0) < 1e-14);
    CHECK(rel_err(kernel_K(cplx(1.5, 0.5), 2.0),
                  cplx(1.7011558213177920727, 0.54850171870509269153)) < 1e-13);
    CHECK_THROWS_AS(kernel_K(cplx(0.5, 0.0), 0.0), SingularAtZero);
}
