#pragma once

#include <cstdint>

#include "mfheight/rat.hpp"

namespace mfh {

// splitmix64; all randomness in the artifact is seed-derived through this so
// reports and synthetic fixtures are byte-reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) {  // inclusive ends
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Small nonzero-denominator rational with entries in [-num_bound, num_bound].
    Rat small_rat(long num_bound = 9, long den_bound = 7) {
        long num = range(-num_bound, num_bound);
        long den = range(1, den_bound);
        return Rat(num, den);
    }

private:
    std::uint64_t state_;
};

}  // namespace mfh
