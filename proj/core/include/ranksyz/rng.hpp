#pragma once

#include <cstdint>

namespace ranksyz {

// xoshiro256** seeded through splitmix64. Self-contained so that seeded runs
// produce identical streams on every platform, unlike the unspecified
// std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return (u64() >> 63) != 0; }

    // Derive an independent deterministic stream, e.g. one per trial index.
    Rng fork(uint64_t salt) { return Rng(u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL)); }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace ranksyz
