#include "fracspline/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fracspline/bspline.hpp"
#include "fracspline/classical_bspline.hpp"
#include "fracspline/differences.hpp"
#include "fracspline/dirichlet.hpp"
#include "fracspline/errors.hpp"
#include "fracspline/fractional.hpp"
#include "fracspline/multivariate.hpp"
#include "fracspline/rng.hpp"
#include "fracspline/special.hpp"
#include "fracspline/weighted_spline.hpp"

namespace fracspline {

namespace {

McConfig cfg_for(std::uint64_t seed, std::uint64_t slot, std::size_t samples = 100000) {
    McConfig cfg;
    cfg.seed = seed;
    cfg.stream_base = slot << 32;
    cfg.samples = samples;
    return cfg;
}

std::vector<VerificationReport> bspline_suite(std::uint64_t seed) {
    std::vector<VerificationReport> out;
    Grid grid(0.0, 1.0 / 256.0, 256 * 20 + 1);
    out.push_back(convolve_check(2.0, 2.0, grid));
    out.push_back(convolve_check(2.0, 3.0, grid));
    out.push_back(convolve_check(cplx(1.5, 0.5), cplx(1.5, -0.5), grid));
    out.push_back(decay_check(2.5, 3));
    out.push_back(decay_check(5.0, 5));
    out.push_back(decay_check(cplx(2.5, 1.0), 3));

    // Fourier consistency: left-Riemann transform of time samples on [0, 40]
    // at step 1/512 against the closed-form symbol.
    {
        const double h = 1.0 / 512.0;
        const std::size_t n = 40 * 512;
        double worst = 0.0;
        for (cplx z : {cplx(2.5, 0.0), cplx(2.5, 1.0), cplx(3.2, -0.7)}) {
            ComplexBSpline b(z);
            std::vector<cplx> samples(n);
            for (std::size_t j = 0; j < n; ++j)
                samples[j] = b.time(static_cast<double>(j) * h).value;
            for (int k = -200; k <= 200; ++k) {
                double w = 0.1 * static_cast<double>(k);
                if (std::abs(w) < 0.1 - 1e-12) continue;
                CompensatedSum acc;
                // rotation recurrence; drift over 20480 steps is ~1e-12
                cplx rot = std::exp(cplx(0.0, -w * h));
                cplx phase = 1.0;
                for (std::size_t j = 0; j < n; ++j) {
                    acc.add(samples[j] * phase);
                    phase *= rot;
                }
                worst = std::max(worst, std::abs(acc.value() * h - b.freq(w)));
            }
        }
        out.push_back(make_report("bspline.fourier_consistency",
                                  {{"window", "40"}, {"step", "1/512"}},
                                  worst, 1e-4, std::nullopt,
                                  "truncation-tail dominated tolerance"));
    }

    // recursion identity at 200 random (z, x)
    {
        Rng rng(seed, 1001);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            cplx z(2.0 + 3.0 * rng.uniform01(), -2.0 + 4.0 * rng.uniform01());
            if (z.real() <= 2.0 + 1e-6) z += 1e-3;
            double x = 8.0 * rng.uniform01();
            if (x <= 0.0) x = 0.5;
            ComplexBSpline b(z);
            worst = std::max(worst, std::abs(recursion_step(z, x) - b.time(x).value));
        }
        out.push_back(make_report("bspline.recursion",
                                  {{"trials", "200"}, {"re_z", "(2,5)"}, {"x", "(0,8)"}},
                                  worst, 1e-8, std::nullopt,
                                  "B_z(x) against the order-reduction recursion"));
    }

    // phase factorization product identity at 100 random (z, omega)
    {
        Rng rng(seed, 1002);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            cplx z(1.0 + 3.0 * rng.uniform01() + 1e-3, -2.0 + 4.0 * rng.uniform01());
            double w = -15.0 + 30.0 * rng.uniform01();
            if (std::abs(std::remainder(w, 2.0 * 3.14159265358979324)) < 0.2) w += 0.5;
            PhaseFactors f = phase_factorization(z, w);
            cplx prod = f.modulus_part * f.phase_part * f.damping_part;
            worst = std::max(worst, std::abs(prod - ComplexBSpline(z).freq(w)));
        }
        out.push_back(make_report("bspline.phase_factorization",
                                  {{"trials", "100"}},
                                  worst, 1e-10, std::nullopt,
                                  "modulation/phase/damping product equals the symbol"));
    }
    return out;
}

std::vector<VerificationReport> fractional_suite(std::uint64_t seed) {
    std::vector<VerificationReport> out;
    TestFunction f = TestFunction::poly_exp({0.0, 0.0, 1.0}, "t^2 exp(-t)");
    std::vector<double> pts{0.25, 0.75, 1.5, 2.5};

    {
        Rng rng(seed, 2001);
        double worst = 0.0;
        std::size_t worst_idx = 0;
        std::vector<VerificationReport> subs;
        for (int i = 0; i < 10; ++i) {
            cplx z1(0.2 + 1.3 * rng.uniform01(), -0.5 + rng.uniform01());
            cplx z2(0.2 + 1.3 * rng.uniform01(), -0.5 + rng.uniform01());
            auto r = semigroup_check(f, FracOrder(z1), FracOrder(z2), pts);
            if (r.discrepancy > worst) {
                worst = r.discrepancy;
                worst_idx = subs.size();
            }
            subs.push_back(std::move(r));
        }
        VerificationReport agg = subs[worst_idx];
        agg.parameters["pairs"] = "10";
        agg.notes += " (worst of 10 random pairs)";
        out.push_back(std::move(agg));
    }
    {
        Rng rng(seed, 2002);
        double worst = 0.0;
        VerificationReport worst_rep;
        for (int i = 0; i < 6; ++i) {
            cplx z(0.3 + 2.2 * rng.uniform01(), -0.8 + 1.6 * rng.uniform01());
            auto r = inverse_check(f, FracOrder(z), pts);
            if (i == 0 || r.discrepancy > worst) {
                worst = r.discrepancy;
                worst_rep = r;
            }
        }
        worst_rep.parameters["orders"] = "6";
        worst_rep.notes += " (worst of 6 random orders)";
        out.push_back(std::move(worst_rep));
    }
    out.push_back(kernel_semigroup_check(0.6, 0.9, {0.5, 1.0, 2.0}));
    out.push_back(kernel_semigroup_check(cplx(0.5, 0.3), cplx(0.8, -0.3), {0.5, 1.0, 2.0}));

    out.push_back(delta_pair_check(2.0, 0, TestFunction::gaussian(0.0)));
    out.push_back(delta_pair_check(2.5, 1, TestFunction::gaussian(1.0)));
    out.push_back(delta_pair_check(cplx(2.0, 1.0), 2, TestFunction::gaussian(2.0)));
    return out;
}

std::vector<VerificationReport> differences_suite(std::uint64_t seed) {
    std::vector<VerificationReport> out;
    TestFunction g = TestFunction::poly_exp({0.0, 0.0, 1.0}, "t^2 exp(-t)");
    TestFunction bump = TestFunction::gaussian(3.0);

    out.push_back(normalization_resolution_check(
        g, {cplx(2.0), cplx(3.0), cplx(2.5), cplx(2.5, 0.5)}));
    out.push_back(weak_integral_identity(TestFunction::exp_decay(), 2.0));
    out.push_back(weak_integral_identity(bump, cplx(2.5, 0.5)));

    // cross-module identity: divided-difference route vs the series evaluator
    {
        Rng rng(seed, 3001);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            cplx z(1.2 + 2.5 * rng.uniform01(), -1.5 + 3.0 * rng.uniform01());
            double x = 8.0 * rng.uniform01();
            ComplexBSpline b(z);
            worst = std::max(worst,
                             std::abs(spline_from_divided_diff(z, x) - b.time(x).value));
        }
        out.push_back(make_report("differences.spline_from_divided_diff",
                                  {{"trials", "100"}},
                                  worst, 1e-9, std::nullopt,
                                  "z [z;N0](x-.)_+^{z-1} equals the time series"));
    }

    for (cplx z : {cplx(2.0), cplx(2.5)}) {
        HgConfig cfg;
        cfg.seed = seed;
        cfg.stream_base = 3100 + static_cast<std::uint64_t>(z.real() * 10);
        auto reps = hermite_genocchi_check(z == cplx(2.0) ? g : bump, z, cfg);
        for (auto& r : reps) out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> dirichlet_suite(std::uint64_t seed) {
    std::vector<VerificationReport> out;
    auto fexp = [](double x) { return cplx(std::exp(x), 0.0); };

    out.push_back(moment_identity_check(WeightVector::positive_real({1, 1, 1}), 0,
                                        cfg_for(seed, 10)));
    out.push_back(moment_identity_check(WeightVector::positive_real({5, 1}), 1,
                                        cfg_for(seed, 11)));
    out.push_back(weight_shift_check(fexp, WeightVector::positive_real({1, 2}),
                                     KnotVector::scalar({0.0, 1.0}), 0,
                                     cfg_for(seed, 12)));
    out.push_back(g_expansion_check(fexp, WeightVector::positive_real({1, 1}),
                                    KnotVector::scalar({0.0, 1.0}), cfg_for(seed, 13)));
    {
        auto reps = symmetry_checks(fexp, WeightVector::positive_real({1.0, 2.0, 0.5}),
                                    KnotVector::scalar({0.0, 1.0, 2.5}), {2, 0, 1},
                                    cfg_for(seed, 14));
        for (auto& r : reps) out.push_back(std::move(r));
    }

    // quadrature vs MC on a shared-domain case (n = 2, real weights)
    {
        WeightVector b = WeightVector::positive_real({1.0, 1.0, 1.0});
        KnotVector tau = KnotVector::scalar({0.0, 1.0, 2.0});
        cplx q = average_quadrature1(fexp, b, tau);
        McEstimate m = average_mc1(fexp, b, tau, cfg_for(seed, 15));
        out.push_back(make_report("dirichlet.quadrature_vs_mc",
                                  {{"n_weights", "3"}},
                                  std::abs(q - m.estimate), 0.0, m.std_error,
                                  "deterministic simplex quadrature against MC"));
    }

    TestFunction g = TestFunction::gaussian(1.0);
    out.push_back(frac_interchange_check(g, WeightVector::positive_real({1, 1}),
                                         KnotVector::scalar({1.5, 1.5}), 0.5,
                                         cfg_for(seed, 16)));
    out.push_back(frac_interchange_check(g, WeightVector::positive_real({1, 1}),
                                         KnotVector::scalar({0.0, 1.0}), 1.0,
                                         cfg_for(seed, 17)));
    out.push_back(frac_interchange_check(g, WeightVector::positive_real({1, 1}),
                                         KnotVector::scalar({0.0, 1.0}), 0.5,
                                         cfg_for(seed, 18)));
    return out;
}

std::vector<VerificationReport> weighted_suite(std::uint64_t seed) {
    std::vector<VerificationReport> out;

    // defining identity on three configurations
    {
        WeightedSpline s1(2.0, WeightVector::ones(3), KnotVector::scalar({0.0, 1.0, 2.0}),
                          100000, cfg_for(seed, 20));
        out.push_back(defining_identity_check(s1, TestFunction::poly_exp({0.0, 0.0, 1.0},
                                                                         "t^2 exp(-t)"),
                                              cfg_for(seed, 21)));
        WeightedSpline s2(2.5, WeightVector::positive_real({2.0, 1.0, 1.0}),
                          KnotVector::scalar({0.0, 1.0, 3.0}), 100000, cfg_for(seed, 22));
        out.push_back(defining_identity_check(s2, TestFunction::gaussian(1.5),
                                              cfg_for(seed, 23)));
        WeightedSpline s3(cplx(2.5, 0.5), WeightVector::ones(4),
                          KnotVector::scalar({0.0, 1.0, 2.0, 3.0}), 100000,
                          cfg_for(seed, 24));
        out.push_back(defining_identity_check(s3, TestFunction::gaussian(2.0),
                                              cfg_for(seed, 25)));
    }

    out.push_back(dirichlet_spline_integer_check(WeightVector::ones(3),
                                                 KnotVector::scalar({0.0, 1.0, 2.0}), 2,
                                                 cfg_for(seed, 26)));
    out.push_back(dirichlet_spline_integer_check(WeightVector::ones(4),
                                                 KnotVector::scalar({0.0, 1.0, 2.0, 3.0}),
                                                 3, cfg_for(seed, 27)));
    out.push_back(dirichlet_spline_integer_check(WeightVector::positive_real({2.0, 1.0}),
                                                 KnotVector::scalar({0.0, 1.0}), 2,
                                                 cfg_for(seed, 28)));
    return out;
}

std::vector<VerificationReport> multivariate_suite(std::uint64_t) {
    std::vector<VerificationReport> out;

    // symbol zeros at varpi <lambda,d> = 2 pi K for integer order
    {
        EquidistantRay ray({1.0, 0.0}, 3.0);
        double worst = 0.0;
        for (int K = 1; K <= 4; ++K) {
            double w[2] = {2.0 * 3.14159265358979324 * K, 0.0};
            worst = std::max(worst, std::abs(mv_freq(ray, std::span<const double>(w, 2))));
        }
        out.push_back(make_report("multivariate.symbol_zeros",
                                  {{"z", "3"}, {"K", "1..4"}},
                                  worst, 1e-12, std::nullopt,
                                  "integer-order symbol vanishes on the dual lattice"));
    }

    EquidistantRay ray({1.0, 0.0}, cplx(2.5, 0.3));
    MvCalibration cal = calibrate_mv_time(ray);
    out.push_back(mv_time_vs_idft_check(ray));
    out.push_back(ridge_consistency_check(ray, Direction({1.0, 0.0}),
                                          TestFunction::gaussian(3.0, 0.8), cal));

    // exponential splines: a = 0 reduction and a -> 0 continuity
    {
        double worst = 0.0;
        ComplexBSpline b(cplx(2.5, 1.0));
        for (double w : {0.0, 0.5, 1.0, 2.0, 7.3}) {
            worst = std::max(worst,
                             std::abs(exp_spline_freq(0.0, cplx(2.5, 1.0), w) - b.freq(w)));
        }
        out.push_back(make_report("multivariate.exp_spline_reduction",
                                  {{"z", "2.5+1i"}},
                                  worst, 1e-14, std::nullopt,
                                  "a = 0 symbol reduces to the cardinal symbol"));
    }
    {
        bool monotone = true;
        double last_gap = 0.0;
        for (double w : {0.5, 1.0, 2.0}) {
            double prev = 1e300;
            for (double a : {0.1, 0.01, 0.001}) {
                double gap = std::abs(exp_spline_freq(a, 2.5, w) -
                                      exp_spline_freq(0.0, 2.5, w));
                if (gap > prev) monotone = false;
                prev = gap;
                last_gap = gap;
            }
        }
        out.push_back(make_report("multivariate.exp_spline_continuity",
                                  {{"a", "0.1,0.01,0.001"}, {"omega", "0.5,1,2"}},
                                  monotone ? last_gap : 1.0, 1e-2, std::nullopt,
                                  "|E(a,.) - E(0,.)| decreases monotonically as a -> 0"));
    }
    {
        // time-domain reduction at a = 0 against the series evaluator
        Grid grid(0.0, 1.0 / 64.0, 64 * 6 + 1);
        SampledFunction et = exp_spline_time(0.0, cplx(2.5, 0.5), grid);
        ComplexBSpline b(cplx(2.5, 0.5));
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.count; ++i)
            worst = std::max(worst, std::abs(et.values[i] - b.time(grid.point(i)).value));
        out.push_back(make_report("multivariate.exp_spline_time_reduction",
                                  {{"z", "2.5+0.5i"}},
                                  worst, 1e-3, std::nullopt,
                                  "windowed inverse transform against the time series"));
    }
    return out;
}

} // namespace

Suite parse_suite(const std::string& name) {
    if (name == "all") return Suite::all;
    if (name == "bspline") return Suite::bspline;
    if (name == "fractional") return Suite::fractional;
    if (name == "differences") return Suite::differences;
    if (name == "dirichlet") return Suite::dirichlet;
    if (name == "weighted") return Suite::weighted;
    if (name == "multivariate") return Suite::multivariate;
    throw DomainError("unknown suite: " + name);
}

std::vector<VerificationReport> run_suite(Suite suite, std::uint64_t seed) {
    std::vector<VerificationReport> out;
    auto append = [&](std::vector<VerificationReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    switch (suite) {
        case Suite::bspline: return bspline_suite(seed);
        case Suite::fractional: return fractional_suite(seed);
        case Suite::differences: return differences_suite(seed);
        case Suite::dirichlet: return dirichlet_suite(seed);
        case Suite::weighted: return weighted_suite(seed);
        case Suite::multivariate: return multivariate_suite(seed);
        case Suite::all:
            append(bspline_suite(seed));
            append(fractional_suite(seed));
            append(differences_suite(seed));
            append(dirichlet_suite(seed));
            append(weighted_suite(seed));
            append(multivariate_suite(seed));
            return out;
    }
    return out;
}

} // namespace fracspline
