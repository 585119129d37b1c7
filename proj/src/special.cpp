#include "fracspline/special.hpp"

#include <cmath>

#include "fracspline/errors.hpp"

namespace fracspline {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(cplx z, double tol) {
    double r = std::round(z.real());
    if (r > 0.5) return false;
    cplx nearest(r, 0.0);
    return std::abs(z - nearest) <= tol;
}

cplx gamma_core(cplx z) {
    // Requires Re z >= 0.5.
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

cplx gamma(cplx z) {
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("gamma: argument within 1e-12 of a nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * gamma_core(1.0 - z));
    }
    return gamma_core(z);
}

cplx rgamma(cplx z) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && z.real() <= 0.0)
        return 0.0;
    if (z.real() < 0.5) {
        // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, stable at and near poles.
        return std::sin(kPi * z) * gamma_core(1.0 - z) / kPi;
    }
    return 1.0 / gamma_core(z);
}

cplx binom(cplx z, unsigned k) {
    // Integer z beyond degree: the falling factorial hits an exact zero.
    cplx c = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        c *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
        if (c == 0.0) return 0.0;
    }
    return c;
}

cplx trunc_pow(double x, cplx w) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (w == 0.0) return 1.0;
        if (w.real() > 0.0) return 0.0;
        throw SingularAtZero("trunc_pow: x = 0 with Re w <= 0");
    }
    if (w.imag() == 0.0) {
        double wr = w.real();
        if (wr == std::floor(wr) && wr >= 0.0 && wr <= 64.0) {
            double r = 1.0;
            for (int j = 0; j < static_cast<int>(wr); ++j) r *= x;
            return r;
        }
    }
    return std::exp(w * std::log(x));
}

cplx kernel_K(cplx z, double x) {
    return trunc_pow(x, z - 1.0) * rgamma(z);
}

} // namespace fracspline
