#include "fracspline/weighted_spline.hpp"

#include <algorithm>
#include <cmath>

#include "fracspline/classical_bspline.hpp"
#include "fracspline/errors.hpp"
#include "fracspline/fractional.hpp"
#include "fracspline/kernels.hpp"
#include "fracspline/quadrature.hpp"
#include "fracspline/special.hpp"

namespace fracspline {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

std::vector<double> draw_projections(const WeightVector& b, const KnotVector& tau,
                                     std::size_t samples, const McConfig& cfg) {
    if (tau.dim != 1) throw DomainError("estimate_density: scalar knots required");
    std::vector<double> xs(samples);
    const std::size_t chunk = cfg.chunk;
    const std::size_t nchunks = (samples + chunk - 1) / chunk;
    std::vector<double> x(1);
    for (std::size_t c = 0; c < nchunks; ++c) {
        Rng rng(cfg.seed, cfg.stream_base + c);
        std::size_t lo = c * chunk, hi = std::min(samples, lo + chunk);
        for (std::size_t s = lo; s < hi; ++s) {
            SimplexSample u = sample_dirichlet(b, rng);
            simplex_combination(u, tau, x);
            xs[s] = x[0];
        }
    }
    return xs;
}

double silverman_bandwidth(std::vector<double> xs) {
    const auto n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double v : xs) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : xs) var += (v - mean) * (v - mean);
    double sd = std::sqrt(var / std::max(1.0, n - 1.0));
    std::sort(xs.begin(), xs.end());
    double q1 = xs[static_cast<std::size_t>(0.25 * (n - 1))];
    double q3 = xs[static_cast<std::size_t>(0.75 * (n - 1))];
    double iqr = q3 - q1;
    double spread = sd;
    if (iqr > 0.0) spread = std::min(spread, iqr / 1.34);
    if (spread <= 0.0) spread = std::max(sd, 1e-6);
    return 0.9 * spread * std::pow(n, -0.2);
}

} // namespace

DensityEstimate estimate_density(const WeightVector& b, const KnotVector& tau,
                                 std::size_t samples, double bandwidth,
                                 const McConfig& cfg, std::size_t grid_count) {
    if (samples < 10000) throw DomainError("estimate_density: samples >= 1e4 required");
    std::vector<double> xs = draw_projections(b, tau, samples, cfg);
    double h = bandwidth > 0.0 ? bandwidth : silverman_bandwidth(xs);

    std::sort(xs.begin(), xs.end());
    double lo = tau.scalar_at(0), hi = lo;
    for (std::size_t i = 0; i < tau.count(); ++i) {
        lo = std::min(lo, tau.scalar_at(i));
        hi = std::max(hi, tau.scalar_at(i));
    }
    lo -= 5.0 * h;
    hi += 5.0 * h;
    Grid grid(lo, (hi - lo) / static_cast<double>(grid_count - 1), grid_count);

    const double inv_h = 1.0 / h;
    const double norm = kInvSqrt2Pi / (static_cast<double>(samples) * h);
    std::vector<cplx> vals(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        double x = grid.point(i);
        // Gaussian contributions beyond nine bandwidths are below double
        // noise relative to the bulk; the sorted window keeps the kernel call
        // contiguous.
        auto first = std::lower_bound(xs.begin(), xs.end(), x - 9.0 * h);
        auto last = std::upper_bound(xs.begin(), xs.end(), x + 9.0 * h);
        double acc = kernels::kde_accumulate(&*first, static_cast<std::size_t>(last - first),
                                             x, inv_h);
        vals[i] = norm * acc;
    }
    DensityEstimate est;
    est.density = SampledFunction(grid, std::move(vals));
    est.bandwidth = h;
    est.samples = samples;
    return est;
}

WeightedSpline::WeightedSpline(cplx z, WeightVector b, KnotVector tau,
                               std::size_t samples, const McConfig& cfg)
    : order(ComplexOrder::spline(z).value()), weights(std::move(b)), knots(std::move(tau)) {
    if (knots.dim != 1) throw DomainError("WeightedSpline: scalar knots required");
    if (knots.scalar_at(0) != 0.0)
        throw DomainError("WeightedSpline: knot sequence must start at 0");
    for (std::size_t i = 1; i < knots.count(); ++i)
        if (!(knots.scalar_at(i) > knots.scalar_at(i - 1)))
            throw DomainError("WeightedSpline: knots must be strictly increasing");
    for (std::size_t n = 1; n < knots.count(); ++n)
        growth_proxy = std::max(growth_proxy, std::pow(std::abs(knots.scalar_at(n)),
                                                       1.0 / static_cast<double>(n)));
    const double e = 2.718281828459045;
    if (!(growth_proxy < e))
        throw DomainError("WeightedSpline: knot growth proxy must stay below e");
    if (weights.mode != WeightVector::Mode::PositiveReal)
        throw DomainError("WeightedSpline: sampling realization needs positive real weights");
    density = estimate_density(weights, knots, samples, 0.0, cfg);
}

VerificationReport defining_identity_check(const WeightedSpline& spline,
                                           const TestFunction& g, const McConfig& cfg) {
    FracOrder zo(spline.order);
    const Grid& grid = spline.density.density.grid;

    CubicInterp dzg = frac_derivative_grid(g, zo, grid.start, grid.back() + 2.0 * grid.step,
                                           1.0 / 128.0);
    // trapezoid of density * D^z g over the KDE grid
    CompensatedSum acc;
    for (std::size_t i = 0; i < grid.count; ++i) {
        cplx term = spline.density.density.values[i] * dzg(grid.point(i));
        if (i == 0 || i + 1 == grid.count) term *= 0.5;
        acc.add(term);
    }
    cplx lhs = acc.value() * grid.step;

    McConfig rhs_cfg = cfg;
    rhs_cfg.stream_base = cfg.stream_base + (1u << 20);
    McEstimate rhs = average_mc1([&](double x) { return dzg(x); }, spline.weights,
                                 spline.knots, rhs_cfg);

    double scale = std::abs(rhs.estimate) + 1e-30;
    double err = std::abs(lhs - rhs.estimate);
    return make_report("weighted.defining_identity",
                       {{"z", format_complex(spline.order)},
                        {"g", g.name()},
                        {"n_knots", std::to_string(spline.knots.count())},
                        {"bandwidth", format_double(spline.density.bandwidth)}},
                       err, 2e-2 * scale, rhs.std_error,
                       "KDE-quadrature pairing vs direct Dirichlet average of D^z g");
}

double dirichlet_projection_density(const WeightVector& b, const KnotVector& tau,
                                    double x) {
    const std::size_t len = b.size();
    if (len != tau.count())
        throw DomainError("dirichlet_projection_density: length mismatch");
    if (len > 4) throw DimensionTooHigh("dirichlet_projection_density: beyond 4 knots");
    if (len == 1) throw DomainError("dirichlet_projection_density: need >= 2 knots");

    // two knots: affine image of a Beta variable
    if (len == 2) {
        double ta = tau.scalar_at(0), tb = tau.scalar_at(1);
        double ba = b.entries[0].real(), bb = b.entries[1].real();
        if (!(tb > ta)) throw DomainError("projection density: knots must increase");
        double u = (x - ta) / (tb - ta);
        if (u <= 0.0 || u >= 1.0) return 0.0;
        double logpdf = (bb - 1.0) * std::log(u) + (ba - 1.0) * std::log1p(-u);
        double logbeta = std::lgamma(bb) + std::lgamma(ba) - std::lgamma(ba + bb);
        return std::exp(logpdf - logbeta) / (tb - ta);
    }

    // stick off the last coordinate: u_k ~ Beta(b_k, sum_rest), rest scaled
    const std::size_t k = len - 1;
    double bk = b.entries[k].real();
    double brest = 0.0;
    for (std::size_t i = 0; i < k; ++i) brest += b.entries[i].real();
    double tk = tau.scalar_at(k);

    std::vector<double> sub_b(k), sub_t(k);
    for (std::size_t i = 0; i < k; ++i) {
        sub_b[i] = b.entries[i].real();
        sub_t[i] = tau.scalar_at(i);
    }
    WeightVector wb = WeightVector::positive_real(sub_b);
    KnotVector wt = KnotVector::scalar(sub_t);

    double logbeta = std::lgamma(bk) + std::lgamma(brest) - std::lgamma(bk + brest);
    auto F = [&](double u) -> cplx {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        double inner = dirichlet_projection_density(wb, wt, (x - u * tk) / (1.0 - u));
        return inner / (1.0 - u);
    };
    // int_0^1 u^{bk-1} (1-u)^{brest-1} F(u) du, split to expose both endpoint
    // weights to the singular integrator
    QuadOptions opts;
    opts.rel_tol = 1e-8;
    opts.abs_tol = 1e-13;
    cplx left = integrate_singular(
        [&](double u) { return std::pow(1.0 - u, brest - 1.0) * F(u); }, 0.0, 0.5,
        cplx(bk - 1.0, 0.0), opts);
    cplx right = integrate_singular(
        [&](double w) { return std::pow(1.0 - w, bk - 1.0) * F(1.0 - w); }, 0.0, 0.5,
        cplx(brest - 1.0, 0.0), opts);
    return (left.real() + right.real()) / std::exp(logbeta);
}

VerificationReport dirichlet_spline_integer_check(const WeightVector& b,
                                                  const KnotVector& tau, int n,
                                                  const McConfig& cfg) {
    if (!(n == 2 || n == 3))
        throw DomainError("dirichlet_spline_integer_check: n in {2, 3}");
    DensityEstimate est = estimate_density(b, tau, std::max<std::size_t>(cfg.samples, 100000),
                                           0.0, cfg);
    bool e_weights = true;
    for (cplx w : b.entries)
        if (w != cplx(1.0, 0.0)) e_weights = false;

    std::vector<double> knots(tau.count());
    for (std::size_t i = 0; i < tau.count(); ++i) knots[i] = tau.scalar_at(i);

    double sup_err = 0.0;
    const Grid& grid = est.density.grid;
    for (std::size_t i = 0; i < grid.count; ++i) {
        double x = grid.point(i);
        double ref = e_weights ? mspline_density(knots, x)
                               : dirichlet_projection_density(b, tau, x);
        sup_err = std::max(sup_err, std::abs(est.density.values[i].real() - ref));
    }
    return make_report("weighted.integer_density",
                       {{"n", std::to_string(n)},
                        {"n_knots", std::to_string(tau.count())},
                        {"e_weights", e_weights ? "true" : "false"},
                        {"bandwidth", format_double(est.bandwidth)}},
                       sup_err, 0.03, std::nullopt,
                       "KDE of the simplex projection against the classical density");
}

} // namespace fracspline
