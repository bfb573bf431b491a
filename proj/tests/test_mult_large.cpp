#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <span>
#include <vector>

#include "invariant_checks.hpp"
#include "palstream/generators.hpp"
#include "palstream/mult_large.hpp"
#include "palstream/multiplicative.hpp"
#include "palstream/oracle.hpp"
#include "test_util.hpp"

using namespace palstream;
using testutil::sym;

namespace {

const HashConfig kCfg = make_config(555);

std::vector<std::uint32_t> base_k_digits(std::uint64_t x, std::uint32_t k) {
    std::vector<std::uint32_t> digits;
    while (x > 0) {
        digits.push_back(static_cast<std::uint32_t>(x % k));
        x /= k;
    }
    return digits;
}

std::vector<std::uint32_t> rle_digits(const KarySegments& ks) {
    std::vector<std::uint32_t> digits;
    for (const auto& run : ks.runs())
        for (std::uint64_t t = 0; t < run.count; ++t) digits.push_back(run.digit);
    return digits;
}

bool rle_canonical(const KarySegments& ks) {
    std::uint32_t prev = UINT32_MAX;
    for (const auto& run : ks.runs()) {
        if (run.count == 0 || run.digit == prev || run.digit >= ks.base()) return false;
        prev = run.digit;
    }
    return true;
}

}  // namespace

TEST_CASE("k selection takes the largest even integer") {
    CHECK(choose_k(7.0) == 4);
    CHECK(choose_k(9.0) == 4);
    CHECK(choose_k(15.0) == 8);
    CHECK(choose_k(100.0) == 50);
    CHECK(choose_k(14.99) == 6);
    CHECK_THROWS_AS(choose_k(6.99), std::invalid_argument);
    CHECK_THROWS_AS(choose_k(1.0), std::invalid_argument);
    CHECK_THROWS_AS(MultLargeEngine(kCfg, 1.0), std::invalid_argument);
}

TEST_CASE("ttl' follows the k-ary schedule") {
    const KaryParams k4{7.0, 4};
    CHECK(ttl_prime(5, k4) == 4);    // 5 = 11 base 4
    CHECK(ttl_prime(16, k4) == 72);  // 16 = 100 base 4: (9/2) * 16
    CHECK(ttl_prime(4, k4) == 18);   // (9/2) * 4
    CHECK(ttl_prime(1, k4) == 4);
    CHECK(class_ttl_prime(0, 4) == 4);
    CHECK(class_ttl_prime(2, 4) == 72);
    // saturation keeps the value in range instead of overflowing
    CHECK(class_ttl_prime(40, 4) == (std::uint64_t{1} << 62));
}

TEST_CASE("k-ary run lists track the digit representation") {
    // k = 4: 3 -> 4 carries a single digit
    KarySegments ks(4);
    for (int t = 0; t < 3; ++t) ks.increment();
    CHECK(ks.beta_prime() == 0);
    CHECK(rle_digits(ks) == std::vector<std::uint32_t>{3});
    ks.increment();
    CHECK(rle_digits(ks) == std::vector<std::uint32_t>{0, 1});
    CHECK(ks.beta_prime() == 1);

    // 15 = 33 base 4 -> 16 = 001
    KarySegments ks15(4);
    for (int t = 0; t < 15; ++t) ks15.increment();
    CHECK(rle_digits(ks15) == std::vector<std::uint32_t>{3, 3});
    ks15.increment();
    CHECK(rle_digits(ks15) == std::vector<std::uint32_t>{0, 0, 1});

    for (std::uint32_t k : {4u, 6u, 10u}) {
        KarySegments chain(k);
        const std::uint64_t limit = k == 4 ? (std::uint64_t{1} << 16) : 20000;
        for (std::uint64_t x = 1; x <= limit; ++x) {
            chain.increment();
            CHECK(rle_digits(chain) == base_k_digits(x, k));
            CHECK(rle_canonical(chain));
            CHECK(chain.beta_prime() == rightmost_nonzero_digit(x, k));
            CHECK(chain.value() == x);
        }
    }
}

TEST_CASE("router dispatches by epsilon range") {
    CHECK_FALSE(MultiplicativeEngine(kCfg, 0.5).uses_kary());
    CHECK(MultiplicativeEngine(kCfg, 0.5).effective_eps() == 0.5);
    CHECK_FALSE(MultiplicativeEngine(kCfg, 3.0).uses_kary());
    CHECK(MultiplicativeEngine(kCfg, 3.0).effective_eps() == 1.0);
    CHECK(MultiplicativeEngine(kCfg, 3.0).requested_eps() == 3.0);
    CHECK(MultiplicativeEngine(kCfg, 7.0).uses_kary());
    CHECK(MultiplicativeEngine(kCfg, 100.0).uses_kary());
    CHECK_THROWS_AS(MultiplicativeEngine(kCfg, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicativeEngine(kCfg, -2.0), std::invalid_argument);
}

TEST_CASE("bounds and reference equivalence hold exhaustively") {
    for (std::uint32_t len = 0; len <= 12; ++len)
        testutil::for_each_string(2, len, [&](const std::vector<Symbol>& s) {
            const std::uint64_t big_l = oracle_lps(s).len;
            MultLargeEngine fast(kCfg, 7.0);
            MultLargeBasic slow(kCfg, 7.0);
            for (Symbol a : s) {
                fast.push(a);
                slow.push(a);
                CHECK(fast.answer() == slow.answer());
            }
            const auto got = fast.answer();
            CHECK(got.len <= big_l);
            CHECK(got.len * 8 >= big_l);  // ceil(L / (1+7)) <= len
        });
}

TEST_CASE("bounds hold on long random binary streams") {
    std::mt19937_64 gen(6);
    for (int rep = 0; rep < 6; ++rep) {
        const auto s = gen_random(10000, 2, gen());
        const std::uint64_t big_l = oracle_lps(s).len;
        for (double eps : {7.0, 15.0}) {
            MultLargeEngine eng(kCfg, eps);
            for (Symbol a : s) eng.push(a);
            const Answer got = eng.answer();
            CHECK(got.len <= big_l);
            CHECK(static_cast<double>(got.len) * (1.0 + eps) >=
                  static_cast<double>(big_l));
            if (got.len > 0)
                CHECK(is_palindrome_naive(
                    std::span<const Symbol>(s).subspan(got.pos - 1, got.len)));
        }
    }
}

TEST_CASE("planted palindromes of scheduled lengths are caught at half size") {
    // a palindrome of length 4 k^d yields a detection of at least 2 k^d
    std::mt19937_64 gen(12);
    const std::uint32_t k = 4;
    for (std::uint32_t d : {1u, 2u, 3u}) {
        const std::uint64_t planted = 4 * (std::uint64_t{1} << (2 * d));  // 4 k^d
        const std::uint64_t n = std::max<std::uint64_t>(4096, planted * 4);
        const auto s = gen_planted(n, 26, gen(), planted);
        const std::uint64_t big_l = oracle_lps(s).len;
        std::uint64_t kd = 1;
        while (kd * k * 4 <= big_l) kd *= k;
        MultLargeEngine eng(kCfg, 7.0);
        for (Symbol a : s) eng.push(a);
        CHECK(eng.answer().len >= 2 * kd);
    }
}

TEST_CASE("reference equivalence on palindrome-heavy streams") {
    std::vector<std::vector<Symbol>> streams;
    streams.emplace_back(5000, Symbol{'a'});
    {
        std::vector<Symbol> s(5000, Symbol{'a'});
        s[2500] = 'b';
        streams.push_back(std::move(s));
    }
    for (const auto& s : streams)
        for (double eps : {7.0, 15.0}) {
            MultLargeEngine fast(kCfg, eps);
            MultLargeBasic slow(kCfg, eps);
            for (Symbol a : s) {
                fast.push(a);
                slow.push(a);
                CHECK(fast.answer() == slow.answer());
            }
            CHECK(fast.counters().max_deletions <= 2);
        }
}

TEST_CASE("live list structure per push") {
    std::mt19937_64 gen(40);
    for (double eps : {7.0, 31.0}) {
        const auto s = gen_random(10000, 2, gen());
        MultLargeEngine eng(kCfg, eps);
        MultLargeBasic ref(kCfg, eps);
        const std::uint32_t k = eng.params().k;
        std::uint64_t i = 0;
        for (Symbol a : s) {
            eng.push(a);
            ref.push(a);
            ++i;
            CHECK(eng.checkpoints().size() == ref.checkpoints().size());
            CHECK(testutil::check_large_occupancy(eng.checkpoints(), i, k));
            CHECK(eng.checkpoints().size() <= testutil::large_size_bound(i, k));
            CHECK(eng.counter_segments().value() == i);
        }
        CHECK(eng.counters().max_cursor_steps <= 3);
        CHECK(eng.counters().max_checks <= 3);
        CHECK(eng.counters().max_deletions <= 2);
    }
}
