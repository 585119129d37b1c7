#pragma once

#include <complex>
#include <vector>

namespace fracspline {

// In-place radix-2 complex FFT, n a power of two. sign = -1 gives the
// forward transform sum f[j] e^{-2 pi i jk/n}; sign = +1 the unnormalized
// inverse (caller divides by n).
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

} // namespace fracspline
