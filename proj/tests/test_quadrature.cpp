#include <doctest.h>

#include <cmath>

#include "fracspline/errors.hpp"
#include "fracspline/quadrature.hpp"
#include "fracspline/rng.hpp"
#include "fracspline/special.hpp"

using namespace fracspline;

TEST_CASE("integrate_singular: closed forms") {
    // int_0^1 t^{-1/2} dt = 2
    cplx v = integrate_singular([](double) { return cplx(1.0); }, 0.0, 1.0,
                                cplx(-0.5, 0.0));
    CHECK(std::abs(v - 2.0) < 1e-9);

    // int_0^1 t^w dt = 1/(w+1), w = 0.25 + 0.5i
    cplx w(0.25, 0.5);
    v = integrate_singular([](double) { return cplx(1.0); }, 0.0, 1.0, w);
    CHECK(std::abs(v - 1.0 / (w + 1.0)) < 1e-9);

    // int_0^1 t^{-1/2} e^{-t} dt, frozen from a substitution oracle
    v = integrate_singular([](double t) { return cplx(std::exp(-t), 0.0); }, 0.0, 1.0,
                           cplx(-0.5, 0.0));
    CHECK(std::abs(v - 1.4936482656248540508) < 1e-9);
}

TEST_CASE("integrate_singular: shifted interval") {
    // int_2^3 (t-2)^{-0.3} cos(t) dt checked against the plain adaptive rule
    // away from the endpoint plus the substitution near it
    cplx direct = integrate_singular([](double t) { return cplx(std::cos(t), 0.0); },
                                     2.0, 3.0, cplx(-0.3, 0.0));
    // compare with a u-substitution evaluation t = 2 + u^{1/0.7}
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    cplx ref = integrate_adaptive(
        [](double u) {
            double p = 0.7;
            double t = 2.0 + std::pow(u, 1.0 / p);
            return cplx(std::cos(t) / p, 0.0);
        },
        0.0, 1.0, opts);
    CHECK(std::abs(direct - ref) < 1e-8);
}

TEST_CASE("integrate_singular: Beta integral property") {
    Rng rng(21, 0);
    for (int i = 0; i < 20; ++i) {
        cplx a(0.1 + 2.0 * rng.uniform01(), -1.0 + 2.0 * rng.uniform01());
        cplx b(0.1 + 2.0 * rng.uniform01(), -1.0 + 2.0 * rng.uniform01());
        cplx left = integrate_singular(
            [&](double t) { return std::exp((b - 1.0) * std::log1p(-t)); }, 0.0, 0.5,
            a - 1.0);
        cplx right = integrate_singular(
            [&](double s) { return std::exp((a - 1.0) * std::log1p(-s)); }, 0.0, 0.5,
            b - 1.0);
        cplx expected = gamma(a) * gamma(b) * rgamma(a + b);
        CHECK(std::abs(left + right - expected) < 1e-8 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("integrate_singular: frozen complex Beta value") {
    cplx a(0.3, 0.2), b(1.1, -0.4);
    cplx left = integrate_singular(
        [&](double t) { return std::exp((b - 1.0) * std::log1p(-t)); }, 0.0, 0.5, a - 1.0);
    cplx right = integrate_singular(
        [&](double s) { return std::exp((a - 1.0) * std::log1p(-s)); }, 0.0, 0.5, b - 1.0);
    CHECK(std::abs(left + right - cplx(2.1153511579708043638, -1.1022533198302264958)) <
          1e-9);
}

TEST_CASE("integrate_singular: error paths") {
    CHECK_THROWS_AS(integrate_singular([](double) { return cplx(1.0); }, 0.0, 1.0,
                                       cplx(-1.0, 0.0)),
                    NonIntegrable);
    CHECK_THROWS_AS(integrate_singular([](double) { return cplx(1.0); }, 1.0, 0.5,
                                       cplx(0.5, 0.0)),
                    DomainError);
}

TEST_CASE("integrate_singular: deterministic") {
    auto f = [](double t) { return cplx(std::exp(-t) * std::sin(3.0 * t), t * t); };
    cplx a = integrate_singular(f, 0.0, 2.0, cplx(-0.7, 0.9));
    cplx b = integrate_singular(f, 0.0, 2.0, cplx(-0.7, 0.9));
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
}

TEST_CASE("integrate_adaptive: smooth reference") {
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    cplx v = integrate_adaptive([](double t) { return cplx(std::sin(t), 0.0); }, 0.0,
                                3.14159265358979323846, opts);
    CHECK(std::abs(v - 2.0) < 1e-11);
}
