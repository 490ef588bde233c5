// Deterministic, platform-independent random number generation.
//
// std::uniform_int_distribution is implementation-defined, so every shuffle,
// jitter and fold assignment in the library goes through these helpers to keep
// outputs byte-identical across compilers and standard libraries.
#pragma once

#include <cstdint>
#include <vector>

namespace hbm {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless hash of a (seed, index) pair; used for per-voxel jitter.
inline std::uint64_t hash_mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (index * 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

class rng {
public:
    explicit rng(std::uint64_t seed) : s_(seed) {
        // warm up so small seeds diverge immediately
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() { return splitmix64(s_); }

    // Unbiased integer in [0, bound) via rejection sampling (Lemire-style).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Double in [0, 1) with 53 bits of randomness.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Double in [-mag, +mag].
    double next_symmetric(double mag) { return (2.0 * next_double() - 1.0) * mag; }

    // Standard normal via Box-Muller (deterministic given the stream).
    double next_normal();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t s_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace hbm
