#pragma once

#include <cstdint>
#include <random>

namespace quiver::detail {

// Draws with fully pinned-down arithmetic so that a fixed seed gives the
// same stream on every platform (the std::uniform_* distributions are
// implementation-defined).

/// Unbiased integer in [0, bound), bound >= 1.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold)
            return x % bound;
    }
}

/// 53-bit uniform double in [0, 1).
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace quiver::detail
