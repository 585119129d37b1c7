#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fracspline/complex_order.hpp"

namespace fracspline {

// Rapidly decaying analytic function on [0, inf) with analytic derivatives of
// every requested order. The shipped families are closed under
// differentiation (polynomial times exponential / Gaussian envelope), so
// derivatives are exact, not numerical.
class TestFunction {
public:
    struct Impl;

    cplx operator()(double t) const;
    cplx derivative(double t, int order) const;
    int max_derivative() const; // -1 means unlimited
    const std::string& name() const;

    // |f| at the spot-check points {10, 20, 40}; used to validate the
    // faster-than-polynomial decay requirement.
    bool decays_rapidly() const;

    // e^{-t}
    static TestFunction exp_decay();
    // p(t) e^{-t}, coefficients ascending
    static TestFunction poly_exp(std::vector<cplx> coeffs, std::string label = "");
    // e^{-((t-center)/width)^2}
    static TestFunction gaussian(double center, double width = 1.0);
    // p(t-center) e^{-((t-center)/width)^2}, coefficients in u = t-center
    static TestFunction poly_gauss(std::vector<cplx> coeffs, double center,
                                   double width = 1.0, std::string label = "");
    // 1/(1+t^2): violates the decay contract and provides no derivatives;
    // exists to exercise TailNotNegligible / MissingDerivative paths.
    static TestFunction slow_decay();

private:
    explicit TestFunction(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

} // namespace fracspline
