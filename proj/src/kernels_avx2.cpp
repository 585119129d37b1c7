// AVX2 variants of the data-parallel kernels. This translation unit is the
// only one compiled with -mavx2; callers go through the runtime dispatch in
// kernels.cpp.

#include <immintrin.h>

#include <cmath>
#include <vector>

#include "fracspline/kernels.hpp"

namespace fracspline::kernels::avx2 {

namespace {

// exp for 4 doubles, Cephes-style: exp(x) = 2^n * expm(r), r = x - n ln2.
// Max relative error observed vs std::exp is a few ulp.
inline __m256d exp4_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d max_x = _mm256_set1_pd(708.0);
    const __m256d min_x = _mm256_set1_pd(-708.0);

    __m256d clamped = _mm256_min_pd(_mm256_max_pd(x, min_x), max_x);
    __m256d nf = _mm256_round_pd(_mm256_mul_pd(clamped, log2e),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_sub_pd(clamped, _mm256_mul_pd(nf, c1));
    r = _mm256_sub_pd(r, _mm256_mul_pd(nf, c2));
    __m256d r2 = _mm256_mul_pd(r, r);

    // Cephes rational: e^r = 1 + 2 r P(r^2) / (Q(r^2) - r P(r^2))
    const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);

    __m256d P = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(p0, r2), p1), r2), p2);
    P = _mm256_mul_pd(P, r);
    __m256d Q = _mm256_add_pd(_mm256_mul_pd(q0, r2), q1);
    Q = _mm256_add_pd(_mm256_mul_pd(Q, r2), q2);
    Q = _mm256_add_pd(_mm256_mul_pd(Q, r2), q3);
    __m256d e = _mm256_div_pd(P, _mm256_sub_pd(Q, P));
    e = _mm256_add_pd(_mm256_add_pd(e, e), _mm256_set1_pd(1.0));

    // scale by 2^n via exponent bits
    __m128i n32 = _mm256_cvtpd_epi32(nf);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    __m256d scale = _mm256_castsi256_pd(bits);
    __m256d out = _mm256_mul_pd(e, scale);

    // flush underflow region to zero
    __m256d tiny = _mm256_cmp_pd(x, min_x, _CMP_LT_OQ);
    return _mm256_andnot_pd(tiny, out);
}

inline double hsum2(__m128d v) {
    return _mm_cvtsd_f64(_mm_add_sd(v, _mm_unpackhi_pd(v, v)));
}

} // namespace

void exp4(const double* in, double* out) {
    _mm256_storeu_pd(out, exp4_pd(_mm256_loadu_pd(in)));
}

double sum_blocked(const double* x, std::size_t n) {
    std::vector<double> acc;
    acc.reserve(n / 4 + 2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        // (x0+x1) and (x2+x3), matching the scalar block rule exactly
        __m256d h = _mm256_hadd_pd(v, v); // [x0+x1, x0+x1, x2+x3, x2+x3]
        __m128d lo = _mm256_castpd256_pd128(h);
        __m128d hi = _mm256_extractf128_pd(h, 1);
        acc.push_back(_mm_cvtsd_f64(_mm_add_sd(lo, hi)));
    }
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
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vih = _mm256_set1_pd(inv_h);
    const __m256d vmhalf = _mm256_set1_pd(-0.5);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d s = _mm256_loadu_pd(samples + j);
        __m256d t = _mm256_mul_pd(_mm256_sub_pd(vx, s), vih);
        __m256d arg = _mm256_mul_pd(vmhalf, _mm256_mul_pd(t, t));
        acc = _mm256_add_pd(acc, exp4_pd(arg));
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    double total = hsum2(_mm_add_pd(lo, hi));
    for (; j < n; ++j) {
        double t = (x - samples[j]) * inv_h;
        total += std::exp(-0.5 * t * t);
    }
    return total;
}

cplx dot_rev(const cplx* a, const cplx* b, std::size_t n) {
    // Two complexes per vector; b is walked backwards, so load the pair
    // (b[-j-1], b[-j]) and swap the 128-bit halves.
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + j));
        __m256d vb = _mm256_loadu_pd(
            reinterpret_cast<const double*>(b - static_cast<std::ptrdiff_t>(j) - 1));
        vb = _mm256_permute2f128_pd(vb, vb, 0x01);
        // complex multiply: re = ar br - ai bi, im = ar bi + ai br
        __m256d br = _mm256_movedup_pd(vb);                  // [br, br]
        __m256d bi = _mm256_permute_pd(vb, 0xF);             // [bi, bi]
        __m256d a_swap = _mm256_permute_pd(va, 0x5);         // [ai, ar]
        __m256d t = _mm256_mul_pd(a_swap, bi);
        acc = _mm256_add_pd(acc, _mm256_addsub_pd(_mm256_mul_pd(va, br), t));
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double re_im[2];
    _mm_store_pd(re_im, s);
    cplx total(re_im[0], re_im[1]);
    for (; j < n; ++j) total += a[j] * b[-static_cast<std::ptrdiff_t>(j)];
    return total;
}

} // namespace fracspline::kernels::avx2
