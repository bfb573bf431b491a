#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "palstream/fingerprint.hpp"  // Symbol
#include "palstream/rng.hpp"

namespace palstream {

// Prefix of 0 1 00 11 000 111 ... of length d. Its longest palindrome is
// O(sqrt(d)), which makes it a useful adversarial pad. `base` offsets the
// two symbols into the caller's alphabet.
inline std::vector<Symbol> gen_nu(std::uint64_t d, Symbol base = 0) {
    std::vector<Symbol> out;
    out.reserve(d);
    for (std::uint64_t block = 1; out.size() < d; ++block)
        for (Symbol bit : {Symbol{0}, Symbol{1}})
            for (std::uint64_t t = 0; t < block && out.size() < d; ++t)
                out.push_back(base + bit);
    return out;
}

// Uniform string over {0, ..., sigma-1}; same seed, same string.
inline std::vector<Symbol> gen_random(std::uint64_t n, std::uint32_t sigma,
                                      std::uint64_t seed) {
    if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
    std::mt19937_64 gen(seed);
    std::vector<Symbol> out(n);
    for (auto& v : out) v = detail::uniform_below(gen, sigma);
    return out;
}

// Uniform string with a fresh random palindrome of length planted_len
// overwritten at a random offset.
inline std::vector<Symbol> gen_planted(std::uint64_t n, std::uint32_t sigma,
                                       std::uint64_t seed, std::uint64_t planted_len) {
    if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (planted_len > n) throw std::invalid_argument("planted length exceeds string length");
    std::mt19937_64 gen(seed);
    std::vector<Symbol> out(n);
    for (auto& v : out) v = detail::uniform_below(gen, sigma);
    if (planted_len == 0) return out;
    const std::uint64_t offset = detail::uniform_below(gen, n - planted_len + 1);
    for (std::uint64_t t = 0; t < (planted_len + 1) / 2; ++t) {
        const Symbol v = detail::uniform_below(gen, sigma);
        out[offset + t] = v;
        out[offset + planted_len - 1 - t] = v;
    }
    return out;
}

}  // namespace palstream
