#pragma once

#include <cstdint>

namespace fracspline {

// Counter-based random stream (Philox 4x32-10, Salmon et al. SC'11).
// A (seed, stream) pair fully determines the sequence, independent of how
// many threads consume other streams; objects are value types and cheap to
// copy, so Monte Carlo chunks can each own their generator.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on the open interval (0, 1).
    double uniform01();

    // Standard normal (Box-Muller; second draw cached).
    double normal();

    // Gamma(shape, 1), shape > 0 (Marsaglia-Tsang, boosted for shape < 1).
    double gamma_draw(double shape);

private:
    void refill();

    std::uint32_t key_[2];
    std::uint32_t ctr_hi_[2]; // stream id occupies the high counter words
    std::uint64_t block_ = 0;
    std::uint32_t buf_[4];
    int pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace fracspline
