#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "palstream/answer.hpp"
#include "palstream/fingerprint.hpp"  // Symbol, ComplementMap

namespace palstream {

namespace detail {

inline bool sym_eq(Symbol x, Symbol y, const ComplementMap* cm) {
    if (!cm) return x == y;
    return y < 256 && x == cm->map[static_cast<std::uint8_t>(y)];
}

}  // namespace detail

// Exact offline longest palindromic substring: length plus the leftmost
// 1-based start achieving it. With a complement map, palindromicity means
// equality with the reverse complement (odd lengths then require a
// self-complementary middle symbol; with the DNA map none exists).
// Linear time.
inline Answer oracle_lps(std::span<const Symbol> s,
                         const ComplementMap* complement = nullptr) {
    const auto n = static_cast<std::int64_t>(s.size());
    Answer best;
    auto consider = [&](std::uint64_t len, std::int64_t start0) {
        if (len > best.len) best = {static_cast<std::uint64_t>(start0) + 1, len};
    };
    auto eq = [&](std::int64_t a, std::int64_t b) {
        return detail::sym_eq(s[static_cast<std::size_t>(a)],
                              s[static_cast<std::size_t>(b)], complement);
    };
    if (n == 0) return best;

    // Odd lengths: d1[i] rings around center i, ring 0 being the center
    // itself (0 when even the single symbol fails, possible only with a
    // complement map).
    {
        std::vector<std::int64_t> d1(static_cast<std::size_t>(n));
        std::int64_t l = 0, r = -1;
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t k = (i > r) ? 0 : std::min(d1[static_cast<std::size_t>(l + r - i)], r - i + 1);
            while (i + k < n && i - k >= 0 && eq(i - k, i + k)) ++k;
            d1[static_cast<std::size_t>(i)] = k;
            if (k >= 1) consider(static_cast<std::uint64_t>(2 * k - 1), i - k + 1);
            --k;
            if (i + k > r) {
                l = i - k;
                r = i + k;
            }
        }
    }
    // Even lengths: d2[i] matched pairs around the gap between i-1 and i.
    {
        std::vector<std::int64_t> d2(static_cast<std::size_t>(n));
        std::int64_t l = 0, r = -1;
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t k = (i > r) ? 0 : std::min(d2[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
            while (i + k < n && i - k - 1 >= 0 && eq(i - k - 1, i + k)) ++k;
            d2[static_cast<std::size_t>(i)] = k;
            if (k >= 1) consider(static_cast<std::uint64_t>(2 * k), i - k);
            --k;
            if (i + k > r) {
                l = i - k - 1;
                r = i + k;
            }
        }
    }
    return best;
}

// Independent quadratic cross-check: expands every center.
inline Answer oracle_lps_naive(std::span<const Symbol> s,
                               const ComplementMap* complement = nullptr) {
    const auto n = static_cast<std::int64_t>(s.size());
    Answer best;
    auto eq = [&](std::int64_t a, std::int64_t b) {
        return detail::sym_eq(s[static_cast<std::size_t>(a)],
                              s[static_cast<std::size_t>(b)], complement);
    };
    for (std::int64_t c = 0; c < n; ++c) {
        std::int64_t k = 0;
        while (c - k >= 0 && c + k < n && eq(c - k, c + k)) ++k;
        if (k >= 1 && static_cast<std::uint64_t>(2 * k - 1) > best.len)
            best = {static_cast<std::uint64_t>(c - k + 1) + 1,
                    static_cast<std::uint64_t>(2 * k - 1)};
        k = 0;
        while (c - k - 1 >= 0 && c + k < n && eq(c - k - 1, c + k)) ++k;
        if (k >= 1 && static_cast<std::uint64_t>(2 * k) > best.len)
            best = {static_cast<std::uint64_t>(c - k) + 1,
                    static_cast<std::uint64_t>(2 * k)};
    }
    return best;
}

// Plain reversal / reverse-complement check for a whole span; the naive
// ground truth behind the fingerprint soundness tests.
inline bool is_palindrome_naive(std::span<const Symbol> s,
                                const ComplementMap* complement = nullptr) {
    std::size_t i = 0, j = s.size();
    while (i < j) {
        --j;
        if (!detail::sym_eq(s[i], s[j], complement)) return false;
        ++i;
    }
    return true;
}

}  // namespace palstream
