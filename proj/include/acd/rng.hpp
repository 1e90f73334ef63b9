#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace acd {

// All randomness in the toolkit flows through these helpers. std::mt19937_64
// output is pinned by the standard; std::uniform_real_distribution and
// friends are not, so we map raw engine output ourselves to keep runs
// byte-reproducible across compilers.

using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed) { return Rng(seed); }

// Uniform double in [0, 1) with 53 bits of entropy.
inline double uniform01(Rng& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). n must be > 0.
inline uint64_t uniform_below(Rng& g, uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % n;
}

// Standard normal via Box-Muller on the pinned uniform stream.
inline double normal01(Rng& g) {
    double u1 = uniform01(g);
    double u2 = uniform01(g);
    while (u1 <= 0.0) u1 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// FNV-1a, used for token hashing, fingerprints, and config hashes.
inline uint64_t fnv1a(std::string_view bytes, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a_mix(uint64_t value, uint64_t h) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xFF;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace acd
