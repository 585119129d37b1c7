#pragma once

#include <complex>
#include <cstddef>

namespace fracspline::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

// Backend resolved once per process: FRACSPLINE_KERNEL=scalar|avx2 overrides,
// otherwise AVX2 is used when the CPU and build support it.
Backend active_backend();
const char* backend_name();
bool avx2_available();

// Deterministic reduction: blocks of four are combined as (x0+x1)+(x2+x3)
// and block sums are reduced pairwise, so scalar and AVX2 agree bit for bit.
double sum_blocked(const double* x, std::size_t n);

// sum_j exp(-0.5 * ((x - samples[j]) * inv_h)^2). The hot loop of kernel
// density estimation. The AVX2 variant uses a polynomial exp; agreement with
// the scalar reference is at rounding level, not bitwise.
double kde_accumulate(const double* samples, std::size_t n, double x, double inv_h);

// sum_{j=0}^{n-1} a[j] * b[-j]  (b walks backwards) -- the inner product of a
// discrete convolution c[i] = sum_j a[j] b[i-j] when called with b = &src[i].
cplx dot_rev(const cplx* a, const cplx* b, std::size_t n);

// Direct entry points per backend, used by the equivalence tests.
namespace scalar {
double sum_blocked(const double* x, std::size_t n);
double kde_accumulate(const double* samples, std::size_t n, double x, double inv_h);
cplx dot_rev(const cplx* a, const cplx* b, std::size_t n);
} // namespace scalar

namespace avx2 {
double sum_blocked(const double* x, std::size_t n);
double kde_accumulate(const double* samples, std::size_t n, double x, double inv_h);
cplx dot_rev(const cplx* a, const cplx* b, std::size_t n);
// Vectorized exp over 4 lanes, exposed for accuracy tests.
void exp4(const double* in, double* out);
} // namespace avx2

} // namespace fracspline::kernels
