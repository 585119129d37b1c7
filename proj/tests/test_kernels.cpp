#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fracspline/kernels.hpp"
#include "fracspline/rng.hpp"

using namespace fracspline;
namespace k = fracspline::kernels;

namespace {
std::vector<double> random_doubles(std::size_t n, double lo, double hi, Rng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.uniform01();
    return v;
}
} // namespace

TEST_CASE("kernels: backend dispatch reports a valid name") {
    const char* name = k::backend_name();
    CHECK((std::string(name) == "avx2" || std::string(name) == "scalar"));
}

TEST_CASE("kernels: sum_blocked scalar vs avx2 agree bit for bit") {
    if (!k::avx2_available()) return;
    Rng rng(31, 0);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 64u, 1001u, 4096u}) {
        auto v = random_doubles(n, -1.0, 1.0, rng);
        double a = k::scalar::sum_blocked(v.data(), n);
        double b = k::avx2::sum_blocked(v.data(), n);
        CHECK(a == b); // identical association order by contract
    }
}

TEST_CASE("kernels: avx2 exp matches std::exp to rounding") {
    if (!k::avx2_available()) return;
    Rng rng(32, 0);
    double worst = 0.0;
    for (int i = 0; i < 4000; ++i) {
        double in[4], out[4];
        for (double& x : in) x = -700.0 + 1400.0 * rng.uniform01();
        k::avx2::exp4(in, out);
        for (int j = 0; j < 4; ++j) {
            double ref = std::exp(in[j]);
            worst = std::max(worst, std::abs(out[j] - ref) / ref);
        }
    }
    CHECK(worst < 5e-15);
}

TEST_CASE("kernels: kde_accumulate equivalence") {
    if (!k::avx2_available()) return;
    Rng rng(33, 0);
    for (std::size_t n : {1u, 4u, 17u, 1000u, 30000u}) {
        auto v = random_doubles(n, -3.0, 3.0, rng);
        double a = k::scalar::kde_accumulate(v.data(), n, 0.4, 2.0);
        double b = k::avx2::kde_accumulate(v.data(), n, 0.4, 2.0);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, a));
    }
}

TEST_CASE("kernels: dot_rev equivalence and correctness") {
    Rng rng(34, 0);
    for (std::size_t n : {1u, 2u, 3u, 8u, 257u}) {
        std::vector<std::complex<double>> a(n), b(n);
        for (auto& x : a) x = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
        for (auto& x : b) x = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
        // reference: plain loop
        std::complex<double> ref = 0.0;
        for (std::size_t j = 0; j < n; ++j) ref += a[j] * b[n - 1 - j];
        std::complex<double> s = k::scalar::dot_rev(a.data(), b.data() + n - 1, n);
        CHECK(std::abs(s - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
        if (k::avx2_available()) {
            std::complex<double> w = k::avx2::dot_rev(a.data(), b.data() + n - 1, n);
            CHECK(std::abs(w - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("kernels: dispatched entry points match the active backend") {
    std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    double d = k::sum_blocked(v.data(), v.size());
    CHECK(d == doctest::Approx(15.0));
}
