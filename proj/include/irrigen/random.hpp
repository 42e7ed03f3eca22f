#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace irrigen {

// std::mt19937_64 output is bit-specified by the standard, but the
// std::*_distribution mappings are not. These explicit mappings keep every
// seeded draw bit-identical across standard libraries, which the
// byte-identical-output guarantees rely on.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + uniform_unit(rng) * (hi - lo);
}

/// Integer in [lo, hi] by scaling; bias is irrelevant at desk-scale ranges.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + std::size_t(uniform_unit(rng) * double(hi - lo + 1));
}

/// Standard normal via Box-Muller; consumes exactly two draws.
inline double normal_unit(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform_unit(rng);  // (0, 1], keeps the log finite
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace irrigen
