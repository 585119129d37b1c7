#include "fracspline/test_function.hpp"

#include <cmath>

#include "fracspline/errors.hpp"

namespace fracspline {

namespace {

using Poly = std::vector<cplx>; // ascending coefficients

Poly poly_deriv(const Poly& p) {
    if (p.size() <= 1) return {cplx(0.0)};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

Poly poly_axpy(const Poly& a, cplx s, const Poly& b_shifted_up) {
    // a + s * (u * b), used by the Gaussian derivative rule
    Poly r(std::max(a.size(), b_shifted_up.size() + 1), cplx(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b_shifted_up.size(); ++i) r[i + 1] += s * b_shifted_up[i];
    return r;
}

Poly poly_sub_scaled(const Poly& a, cplx s, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), cplx(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= s * b[i];
    return r;
}

cplx poly_eval(const Poly& p, double x) {
    cplx acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

} // namespace

struct TestFunction::Impl {
    enum class Kind { PolyExp, PolyGauss, Rational } kind;
    Poly coeffs;          // PolyExp: in t; PolyGauss: in u = t - center
    double center = 0.0;
    double inv_w2 = 1.0;  // 1/width^2 for the Gaussian envelope
    std::string label;
    int max_order = -1;

    cplx value(double t, int order) const {
        switch (kind) {
            case Kind::PolyExp: {
                Poly q = coeffs;
                for (int i = 0; i < order; ++i) q = poly_sub_scaled(poly_deriv(q), 1.0, q);
                return poly_eval(q, t) * std::exp(-t);
            }
            case Kind::PolyGauss: {
                Poly q = coeffs;
                for (int i = 0; i < order; ++i)
                    q = poly_axpy(poly_deriv(q), -2.0 * inv_w2, q);
                double u = t - center;
                return poly_eval(q, u) * std::exp(-inv_w2 * u * u);
            }
            case Kind::Rational:
                return 1.0 / (1.0 + t * t);
        }
        return 0.0;
    }
};

TestFunction::TestFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

cplx TestFunction::operator()(double t) const { return impl_->value(t, 0); }

cplx TestFunction::derivative(double t, int order) const {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    if (impl_->max_order >= 0 && order > impl_->max_order)
        throw MissingDerivative(impl_->label + ": derivative of order " +
                                std::to_string(order) + " not available");
    return impl_->value(t, order);
}

int TestFunction::max_derivative() const { return impl_->max_order; }

const std::string& TestFunction::name() const { return impl_->label; }

bool TestFunction::decays_rapidly() const {
    // Doubling x must shrink |f| by at least 2^8 (i.e. faster than x^-8),
    // checked across 10 -> 20 -> 40.
    for (double x : {10.0, 20.0}) {
        double v = std::abs((*this)(x));
        double v2 = std::abs((*this)(2.0 * x));
        if (v2 > std::max(v * 0x1.0p-8, 1e-280)) return false;
    }
    return true;
}

TestFunction TestFunction::exp_decay() { return poly_exp({cplx(1.0)}, "exp(-t)"); }

TestFunction TestFunction::poly_exp(std::vector<cplx> coeffs, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::PolyExp;
    impl->coeffs = std::move(coeffs);
    impl->label = label.empty() ? "poly*exp(-t)" : std::move(label);
    return TestFunction(impl);
}

TestFunction TestFunction::gaussian(double center, double width) {
    return poly_gauss({cplx(1.0)}, center, width,
                      "exp(-((t-" + std::to_string(center) + ")/w)^2)");
}

TestFunction TestFunction::poly_gauss(std::vector<cplx> coeffs, double center,
                                      double width, std::string label) {
    if (!(width > 0.0)) throw DomainError("TestFunction: width must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::PolyGauss;
    impl->coeffs = std::move(coeffs);
    impl->center = center;
    impl->inv_w2 = 1.0 / (width * width);
    impl->label = label.empty() ? "poly*gauss" : std::move(label);
    return TestFunction(impl);
}

TestFunction TestFunction::slow_decay() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Rational;
    impl->label = "1/(1+t^2)";
    impl->max_order = 0;
    return TestFunction(impl);
}

} // namespace fracspline
