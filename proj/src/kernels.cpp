#include "fracspline/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace fracspline::kernels {

namespace scalar {

double sum_blocked(const double* x, std::size_t n) {
    // block sums (x0+x1)+(x2+x3), then pairwise tree over blocks
    std::vector<double> acc;
    acc.reserve(n / 4 + 2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc.push_back((x[i] + x[i + 1]) + (x[i + 2] + x[i + 3]));
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i];
    if (acc.empty()) return tail;
    while (acc.size() > 1) {
        std::size_t half = acc.size() / 2;
        for (std::size_t j = 0; j < half; ++j) acc[j] = acc[2 * j] + acc[2 * j + 1];
        if (acc.size() % 2 == 1) {
            acc[half] = acc.back();
            acc.resize(half + 1);
        } else {
            acc.resize(half);
        }
    }
    return acc[0] + tail;
}

double kde_accumulate(const double* samples, std::size_t n, double x, double inv_h) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double t = (x - samples[j]) * inv_h;
        s += std::exp(-0.5 * t * t);
    }
    return s;
}

cplx dot_rev(const cplx* a, const cplx* b, std::size_t n) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a[j] * b[-static_cast<std::ptrdiff_t>(j)];
    return s;
}

} // namespace scalar

#ifndef FRACSPLINE_HAVE_AVX2_TU
namespace avx2 {
double sum_blocked(const double*, std::size_t) { return 0.0; }
double kde_accumulate(const double*, std::size_t, double, double) { return 0.0; }
cplx dot_rev(const cplx*, const cplx*, std::size_t) { return 0.0; }
void exp4(const double*, double*) {}
} // namespace avx2
#endif

bool avx2_available() {
#ifdef FRACSPLINE_HAVE_AVX2_TU
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Backend resolve_backend() {
    if (const char* env = std::getenv("FRACSPLINE_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::avx2;
        return Backend::scalar;
    }
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

} // namespace

Backend active_backend() {
    static const Backend b = resolve_backend();
    return b;
}

const char* backend_name() {
    return active_backend() == Backend::avx2 ? "avx2" : "scalar";
}

double sum_blocked(const double* x, std::size_t n) {
    return active_backend() == Backend::avx2 ? avx2::sum_blocked(x, n)
                                             : scalar::sum_blocked(x, n);
}

double kde_accumulate(const double* samples, std::size_t n, double x, double inv_h) {
    return active_backend() == Backend::avx2 ? avx2::kde_accumulate(samples, n, x, inv_h)
                                             : scalar::kde_accumulate(samples, n, x, inv_h);
}

cplx dot_rev(const cplx* a, const cplx* b, std::size_t n) {
    return active_backend() == Backend::avx2 ? avx2::dot_rev(a, b, n)
                                             : scalar::dot_rev(a, b, n);
}

} // namespace fracspline::kernels
