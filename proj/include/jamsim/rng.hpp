// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <complex>
#include <cmath>

namespace jamsim {

// 64-bit finalizer (splitmix64 / murmur3 style). Used to derive independent
// seeds for named substreams so that parallel evaluation order can never
// change which draws a consumer sees.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derives a child seed from a base seed and an integer path, e.g.
// derive_seed(seed, {kTagPathGain, user, path}).
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(base);
    for (std::uint64_t v : path) {
        s = mix64(s ^ mix64(v));
    }
    return s;
}

// Substream tags. Values are arbitrary but frozen: changing them changes
// every seeded scenario.
enum SeedTag : std::uint64_t {
    kTagUserDoa = 1,
    kTagUserDod = 2,
    kTagUserGain = 3,
    kTagJammerDoa = 4,
    kTagJammerDod = 5,
    kTagJammerGain = 6,
    kTagPowerIter = 7,
    kTagTrial = 8,
};

// The standard fixes the mt19937_64 output sequence but not the distribution
// adaptors, so the transforms below are spelled out to keep seeded scenarios
// stable across toolchains.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Standard normal via Box-Muller.
inline double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
inline std::complex<double> complex_normal(std::mt19937_64& rng, double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = s * standard_normal(rng);
    const double im = s * standard_normal(rng);
    return {re, im};
}

}  // namespace jamsim
