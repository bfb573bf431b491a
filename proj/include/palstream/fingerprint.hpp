#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

#include "palstream/rng.hpp"

namespace palstream {

// Stream symbols are unsigned integers below the hash modulus; byte streams
// use the byte value directly. Value 0 is allowed.
using Symbol = std::uint64_t;

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {

// Exact (a * b) mod p for 61-bit operands. The Mersenne path reduces the
// 122-bit product without division and stays branch-light.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    if (p == kMersenne61) {
        std::uint64_t s = static_cast<std::uint64_t>(x & kMersenne61) +
                          static_cast<std::uint64_t>(x >> 61);
        s = (s & kMersenne61) + (s >> 61);
        return s >= kMersenne61 ? s - kMersenne61 : s;
    }
    return static_cast<std::uint64_t>(x % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;  // a, b < p < 2^62: no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace detail

// Involutive byte permutation. With the DNA map installed, the reversed hash
// runs over complemented symbols and the palindrome test becomes a
// reverse-complement test.
struct ComplementMap {
    std::array<std::uint8_t, 256> map{};

    static ComplementMap identity() {
        ComplementMap m;
        for (unsigned c = 0; c < 256; ++c) m.map[c] = static_cast<std::uint8_t>(c);
        return m;
    }

    static ComplementMap dna() {
        ComplementMap m = identity();
        auto swap_pair = [&](char a, char b) {
            m.map[static_cast<std::uint8_t>(a)] = static_cast<std::uint8_t>(b);
            m.map[static_cast<std::uint8_t>(b)] = static_cast<std::uint8_t>(a);
        };
        swap_pair('A', 'T');
        swap_pair('C', 'G');
        swap_pair('a', 't');
        swap_pair('c', 'g');
        return m;
    }

    bool is_involution() const {
        for (unsigned c = 0; c < 256; ++c)
            if (map[map[c]] != c) return false;
        return true;
    }
};

struct HashConfig {
    std::uint64_t p;      // prime modulus, fits in 61 bits
    std::uint64_t r;      // hash base in [1, p-1]
    std::uint64_t r_inv;  // r^{-1} mod p
    std::optional<ComplementMap> complement;

    Symbol complemented(Symbol a) const {
        if (!complement) return a;
        assert(a < 256);
        return complement->map[static_cast<std::uint8_t>(a)];
    }
};

// Draws the hash base from [1, p-1] with a deterministic generator, so the
// same seed always produces the same config.
inline HashConfig make_config(std::uint64_t seed,
                              std::optional<ComplementMap> complement = {},
                              std::uint64_t prime = kMersenne61) {
    if (complement && !complement->is_involution())
        throw std::invalid_argument("complement map must be an involution");
    std::mt19937_64 gen(seed);
    HashConfig cfg;
    cfg.p = prime;
    cfg.r = 1 + detail::uniform_below(gen, prime - 1);
    cfg.r_inv = detail::pow_mod(cfg.r, prime - 2, prime);  // prime modulus: Fermat inverse
    cfg.complement = std::move(complement);
    return cfg;
}

// I(i): everything needed to hash any substring ending before position i in
// O(1). The tuple describes the prefix S[1..i-1].
struct FingerprintTuple {
    std::uint64_t i;      // 1-based stream position
    std::uint64_t ff;     // F^F(1, i-1) = sum S[t] r^t mod p
    std::uint64_t fr;     // F^R(1, i-1) = sum S[t] r^{i-t} mod p, over complemented symbols
    std::uint64_t r_neg;  // r^{-(i-1)} mod p
    std::uint64_t r_pos;  // r^{i} mod p
};

inline FingerprintTuple initial_tuple(const HashConfig& cfg) {
    return {1, 0, 0, 1, cfg.r};
}

// I(i) + S[i] -> I(i+1), a constant number of modular operations.
inline FingerprintTuple extend(const FingerprintTuple& t, Symbol a, const HashConfig& cfg) {
    assert(a < cfg.p);
    const std::uint64_t p = cfg.p;
    const Symbol c = cfg.complemented(a);
    FingerprintTuple u;
    u.i = t.i + 1;
    u.ff = detail::add_mod(t.ff, detail::mul_mod(a, t.r_pos, p), p);
    u.fr = detail::mul_mod(detail::add_mod(t.fr, c, p), cfg.r, p);
    u.r_neg = detail::mul_mod(t.r_neg, cfg.r_inv, p);
    u.r_pos = detail::mul_mod(t.r_pos, cfg.r, p);
    return u;
}

// Given I(i) and I(j+1) from the same stream and config, decides whether
// S[i..j] hashes as a palindrome:
//   F^F(i,j) = r^{-(i-1)} (F^F(1,j) - F^F(1,i-1))
//   F^R(i,j) = F^R(1,j) - r^{j-i+1} F^R(1,i-1),  r^{j-i+1} = r^{j+1} r^{-(i-1)} r^{-1}
// False positives happen with probability at most (j-i+1)/p per call.
inline bool is_palindrome(const FingerprintTuple& ti, const FingerprintTuple& tj1,
                          const HashConfig& cfg) {
    assert(ti.i < tj1.i);
    // Tuples built under a different config would break r_neg * r_pos = r.
    assert(detail::mul_mod(ti.r_neg, ti.r_pos, cfg.p) == cfg.r);
    assert(detail::mul_mod(tj1.r_neg, tj1.r_pos, cfg.p) == cfg.r);
    const std::uint64_t p = cfg.p;
    const std::uint64_t ff = detail::mul_mod(ti.r_neg, detail::sub_mod(tj1.ff, ti.ff, p), p);
    const std::uint64_t rpow =
        detail::mul_mod(detail::mul_mod(tj1.r_pos, ti.r_neg, p), cfg.r_inv, p);
    const std::uint64_t fr = detail::sub_mod(tj1.fr, detail::mul_mod(rpow, ti.fr, p), p);
    return ff == fr;
}

}  // namespace palstream
