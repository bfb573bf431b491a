#pragma once

#include <cstdint>
#include <random>

namespace palstream::detail {

// Uniform draw from [0, bound) by rejection sampling. mt19937_64 output is
// fully specified by the standard, so results are identical on every
// platform (std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t v = gen();
        if (v < limit) return v % bound;
    }
}

}  // namespace palstream::detail
