#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <span>

#include "palstream/generators.hpp"
#include "palstream/oracle.hpp"
#include "palstream/rng.hpp"
#include "test_util.hpp"

using namespace palstream;
using testutil::sym;

TEST_CASE("oracle handles the small fixed cases") {
    CHECK(oracle_lps(sym("abacaba")) == Answer{1, 7});
    CHECK(oracle_lps(sym("")) == Answer{0, 0});
    CHECK(oracle_lps(sym("aa")) == Answer{1, 2});
    CHECK(oracle_lps(sym("ab")) == Answer{1, 1});
    CHECK(oracle_lps(sym("abc")) == Answer{1, 1});
    CHECK(oracle_lps(sym("xabay")) == Answer{2, 3});
    CHECK(oracle_lps_naive(sym("aa")) == Answer{1, 2});
    CHECK(oracle_lps_naive(sym("ab")) == Answer{1, 1});
}

TEST_CASE("linear and quadratic oracles agree exhaustively and at random") {
    for (std::uint32_t len = 0; len <= 12; ++len)
        testutil::for_each_string(2, len, [&](const std::vector<Symbol>& s) {
            CHECK(oracle_lps(s) == oracle_lps_naive(s));
        });

    std::mt19937_64 gen(123);
    for (int rep = 0; rep < 10000; ++rep) {
        const std::uint32_t sigma = rep % 3 == 0 ? 2 : (rep % 3 == 1 ? 4 : 26);
        const std::size_t n = detail::uniform_below(gen, 64);
        std::vector<Symbol> s(n);
        for (auto& v : s) v = detail::uniform_below(gen, sigma);
        CHECK(oracle_lps(s) == oracle_lps_naive(s));
    }
}

TEST_CASE("oracles agree in reverse-complement mode") {
    const ComplementMap dna = ComplementMap::dna();
    const Symbol acgt[] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 gen(5);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = detail::uniform_below(gen, 48);
        std::vector<Symbol> s(n);
        for (auto& v : s) v = acgt[detail::uniform_below(gen, 4)];
        const Answer a = oracle_lps(s, &dna);
        CHECK(a == oracle_lps_naive(s, &dna));
        CHECK(a.len % 2 == 0);  // DNA complement has no fixed points
        if (a.len > 0)
            CHECK(is_palindrome_naive(std::span<const Symbol>(s).subspan(a.pos - 1, a.len),
                                      &dna));
    }
    CHECK(oracle_lps(sym("AA"), &dna) == Answer{0, 0});
    CHECK(oracle_lps(sym("AT"), &dna) == Answer{1, 2});
    CHECK(oracle_lps(sym("ACGT"), &dna) == Answer{1, 4});
}

TEST_CASE("nu prefix follows the block construction") {
    // blocks 0 1 00 11 000 111 ...
    CHECK(gen_nu(6) == (std::vector<Symbol>{0, 1, 0, 0, 1, 1}));
    CHECK(gen_nu(6, '0') == sym("010011"));
    CHECK(gen_nu(0).empty());
    CHECK(gen_nu(10) == (std::vector<Symbol>{0, 1, 0, 0, 1, 1, 0, 0, 0, 1}));

    // direct construction oracle for larger prefixes
    std::vector<Symbol> direct;
    for (std::uint64_t block = 1; direct.size() < 5000; ++block) {
        for (std::uint64_t t = 0; t < block && direct.size() < 5000; ++t) direct.push_back(0);
        for (std::uint64_t t = 0; t < block && direct.size() < 5000; ++t) direct.push_back(1);
    }
    CHECK(gen_nu(5000) == direct);
}

TEST_CASE("nu prefixes have short palindromes") {
    for (std::uint64_t d : {100ull, 1000ull, 10000ull, 100000ull}) {
        const auto nu = gen_nu(d);
        const auto best = oracle_lps(nu);
        CHECK(static_cast<double>(best.len) <= 4.0 * std::sqrt(static_cast<double>(d)));
    }
}

TEST_CASE("random generator is deterministic and stays in the alphabet") {
    const auto a = gen_random(5000, 4, 77);
    const auto b = gen_random(5000, 4, 77);
    CHECK(a == b);
    CHECK(a != gen_random(5000, 4, 78));
    for (Symbol v : a) CHECK(v < 4);
    CHECK_THROWS_AS(gen_random(10, 1, 1), std::invalid_argument);
}

TEST_CASE("planted generator guarantees its palindrome") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::uint64_t n = 400;
        const std::uint64_t planted = 2 + seed * 3 % 97;
        const auto s = gen_planted(n, 26, seed, planted);
        CHECK(s == gen_planted(n, 26, seed, planted));
        CHECK(oracle_lps(s).len >= planted);
    }
    const auto whole = gen_planted(51, 4, 9, 51);
    CHECK(oracle_lps(whole).len == 51);
    CHECK(is_palindrome_naive(whole));
    CHECK_THROWS_AS(gen_planted(10, 4, 1, 11), std::invalid_argument);
}
