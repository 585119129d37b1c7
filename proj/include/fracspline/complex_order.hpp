#pragma once

#include <complex>

#include "fracspline/errors.hpp"

namespace fracspline {

using cplx = std::complex<double>;

// A complex order z with the regime enforced at construction.
// fractional() requires Re z > 0 (differintegral orders), spline() requires
// Re z > 1 (the continuity regime for splines of complex order).
class ComplexOrder {
public:
    static ComplexOrder fractional(cplx z) {
        if (!(z.real() > 0.0))
            throw DomainError("ComplexOrder: Re z > 0 required, got Re z = " +
                              std::to_string(z.real()));
        return ComplexOrder(z);
    }

    static ComplexOrder spline(cplx z) {
        if (!(z.real() > 1.0))
            throw DomainError("ComplexOrder: Re z > 1 required for spline orders, got Re z = " +
                              std::to_string(z.real()));
        return ComplexOrder(z);
    }

    cplx value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }

    bool is_integer() const {
        return z_.imag() == 0.0 && z_.real() == std::floor(z_.real());
    }

private:
    explicit ComplexOrder(cplx z) : z_(z) {}
    cplx z_;
};

} // namespace fracspline
