// Pseudo-random streams used by the generator and the Monte-Carlo harness.
//
// All randomized output of this library is produced by xoshiro256++ seeded
// through splitmix64, with bounded draws via Lemire's multiply-shift
// rejection. Only 64-bit integer operations are involved, so a given
// (seed, n) pair produces bit-identical results on every platform.
// Reference first outputs are frozen in the unit tests.
#pragma once

#include <cstdint>

namespace pasecdeg {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform draw from [0, bound), bound >= 1. Lemire's method: unbiased,
    // one 64x64->128 multiply per accepted draw.
    std::uint64_t bounded(std::uint64_t bound) {
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// Seed for replicate r of a run with base seed `base`: the first splitmix64
// output of the stream started at base + (r+1)*0x9e3779b97f4a7c15. Replicate
// seeds are therefore reproducible individually, independent of how many
// replicates run or in which order.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t replicate) {
    return SplitMix64(base + (replicate + 1) * 0x9e3779b97f4a7c15ULL).next();
}

} // namespace pasecdeg
