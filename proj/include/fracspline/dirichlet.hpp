#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fracspline/complex_order.hpp"
#include "fracspline/report.hpp"
#include "fracspline/rng.hpp"
#include "fracspline/test_function.hpp"

namespace fracspline {

// Dirichlet weight vector b. PositiveReal mode is samplable; Complex mode
// (Re b_j > 0) is reachable only through the deterministic quadrature path.
struct WeightVector {
    enum class Mode { PositiveReal, Complex };
    std::vector<cplx> entries;
    Mode mode = Mode::PositiveReal;

    static WeightVector positive_real(std::vector<double> b);
    static WeightVector complex_weights(std::vector<cplx> b);
    static WeightVector ones(std::size_t n); // b = e, length n

    std::size_t size() const { return entries.size(); }
    cplx total() const;
    WeightVector shifted(std::size_t j) const; // b + e_j
};

// Knots tau^0..tau^N in R^s, flat storage.
struct KnotVector {
    std::vector<double> data;
    std::size_t dim = 1;
    bool declared_infinite = false;
    double growth_proxy = 0.0; // max_n ||tau^n||^{1/n}, recorded when declared_infinite

    static KnotVector scalar(std::vector<double> taus, bool declared_infinite = false);
    static KnotVector vectors(const std::vector<std::vector<double>>& taus);

    std::size_t count() const { return dim == 0 ? 0 : data.size() / dim; }
    double scalar_at(std::size_t i) const;
    std::span<const double> at(std::size_t i) const;
    bool constant() const;
};

struct SimplexSample {
    std::vector<double> u; // nonnegative, sums to 1
};

SimplexSample sample_dirichlet(const WeightVector& b, Rng& rng);
// b = e on Delta^n via sorted-uniform spacings (n+1 coordinates).
SimplexSample sample_uniform_simplex(int n, Rng& rng);

// u . tau; returns the common value directly when all knots coincide, which
// keeps the constant-knot average exact with zero variance.
void simplex_combination(const SimplexSample& u, const KnotVector& tau,
                         std::span<double> out);

struct McEstimate {
    cplx estimate;
    double std_error = 0.0;
};

struct McConfig {
    std::size_t samples = 100000;
    std::uint64_t seed = 7;
    std::uint64_t stream_base = 0;
    std::size_t chunk = 8192;
    int threads = 0; // 0 -> FRACSPLINE_THREADS (default 1)
};

// Chunked Monte Carlo driver: chunk c draws from Rng(seed, stream_base + c)
// and partial results combine in chunk order, so the estimate is bitwise
// independent of the thread count.
McEstimate mc_run(const std::function<cplx(Rng&)>& draw_value, const McConfig& cfg);

using SimplexFn = std::function<cplx(std::span<const double>)>;
using ScalarFn = std::function<cplx(double)>;

// F(b; tau) = E_b[ f(u . tau) ] by Monte Carlo (PositiveReal weights).
McEstimate average_mc(const SimplexFn& f, const WeightVector& b, const KnotVector& tau,
                      const McConfig& cfg);
McEstimate average_mc1(const ScalarFn& f, const WeightVector& b, const KnotVector& tau,
                       const McConfig& cfg);

// Deterministic nested quadrature over the simplex (n <= 3), both weight
// modes, relative tolerance ~1e-7. DimensionTooHigh above n = 3.
cplx average_quadrature(const SimplexFn& f, const WeightVector& b, const KnotVector& tau);
cplx average_quadrature1(const ScalarFn& f, const WeightVector& b, const KnotVector& tau);

VerificationReport moment_identity_check(const WeightVector& b, std::size_t j,
                                         const McConfig& cfg);

// E_b[u_j f(u.tau)] = w_j E_{b+e_j}[f(u.tau)] and F(b) = sum_j w_j F(b+e_j).
VerificationReport weight_shift_check(const ScalarFn& f, const WeightVector& b,
                                      const KnotVector& tau, std::size_t j,
                                      const McConfig& cfg);

// G(b; tau) = sum_j w_j tau^j F(b+e_j; tau) for g(x) = x f(x), scalar knots.
VerificationReport g_expansion_check(const ScalarFn& f, const WeightVector& b,
                                     const KnotVector& tau, const McConfig& cfg);

// Permutation invariance, knot-merge, and the zero-weight drop limit
// (b0 in {0.1, 0.01} with monotone discrepancy).
std::vector<VerificationReport> symmetry_checks(const ScalarFn& f, const WeightVector& b,
                                                const KnotVector& tau,
                                                const std::vector<std::size_t>& permutation,
                                                const McConfig& cfg);

// Diagonal fractional interchange: applying the (-1)^n-signed diagonal
// operator to x -> F(b; tau + x e) against E_b[(D^z g)(u.tau)]; when m = 1
// the u_i-weighted partial variant is checked as well. Loosest check in the
// suite: pass within max(1e-3, 3 sigma).
VerificationReport frac_interchange_check(const TestFunction& g, const WeightVector& b,
                                          const KnotVector& tau, cplx z,
                                          const McConfig& cfg);

} // namespace fracspline
