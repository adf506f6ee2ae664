#pragma once

#include <cstdint>
#include <random>

namespace navsim {

// All randomness flows through one engine per episode so runs are
// reproducible from a single seed. The helpers below consume exactly one
// engine draw each; std::uniform_*_distribution is avoided because its
// draw count is implementation-defined.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Uniform double in [0, 1) with 53-bit resolution.
inline double rand01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). n must be > 0.
inline std::size_t rand_index(Rng& rng, std::size_t n) {
    auto i = static_cast<std::size_t>(rand01(rng) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

}  // namespace navsim
