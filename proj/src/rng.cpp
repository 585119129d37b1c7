#include "fracspline/rng.hpp"

#include <cmath>

namespace fracspline {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(prod);
    hi = static_cast<std::uint32_t>(prod >> 32);
}

inline void round_once(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mulhilo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    std::uint32_t out0 = hi1 ^ ctr[1] ^ key[0];
    std::uint32_t out1 = lo1;
    std::uint32_t out2 = hi0 ^ ctr[3] ^ key[1];
    std::uint32_t out3 = lo0;
    ctr[0] = out0;
    ctr[1] = out1;
    ctr[2] = out2;
    ctr[3] = out3;
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
    ctr_hi_[0] = static_cast<std::uint32_t>(stream);
    ctr_hi_[1] = static_cast<std::uint32_t>(stream >> 32);
}

void Rng::refill() {
    std::uint32_t ctr[4] = {static_cast<std::uint32_t>(block_),
                            static_cast<std::uint32_t>(block_ >> 32),
                            ctr_hi_[0], ctr_hi_[1]};
    std::uint32_t key[2] = {key_[0], key_[1]};
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kPhiloxW32A;
            key[1] += kPhiloxW32B;
        }
        round_once(ctr, key);
    }
    buf_[0] = ctr[0];
    buf_[1] = ctr[1];
    buf_[2] = ctr[2];
    buf_[3] = ctr[3];
    ++block_;
    pos_ = 0;
}

std::uint32_t Rng::next_u32() {
    if (pos_ >= 4) refill();
    return buf_[pos_++];
}

std::uint64_t Rng::next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double Rng::uniform01() {
    // 53-bit mantissa, shifted off the ends of (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.28318530717958647692 * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_normal_ = true;
    return r * std::cos(a);
}

double Rng::gamma_draw(double shape) {
    if (shape == 1.0) return -std::log(uniform01());
    if (shape < 1.0) {
        double g = gamma_draw(shape + 1.0);
        return g * std::pow(uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

} // namespace fracspline
