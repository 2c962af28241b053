#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paracon/agreement.hpp"
#include "paracon/error.hpp"
#include "paracon/text.hpp"

using namespace paracon;

TEST_CASE("fleiss kappa on a small hand-worked table")
{
    // P-bar = (1 + 1 + 1/3) / 3 = 7/9, p = (5/9, 4/9), P-bar_e = 41/81, kappa = 22/40.
    const auto k = fleiss_kappa({{3, 0}, {0, 3}, {2, 1}});
    REQUIRE(k.kappa.has_value());
    CHECK(*k.kappa == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(k.observed_agreement == doctest::Approx(7.0 / 9.0));
    CHECK(k.chance_agreement == doctest::Approx(41.0 / 81.0));
    CHECK(k.raters == 3);
}

TEST_CASE("fleiss kappa extremes")
{
    CHECK(*fleiss_kappa({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {4, 0, 0}}).kappa == 1.0);
    CHECK(*fleiss_kappa({{2, 0}, {0, 2}}).kappa == 1.0);
    // Every rating in one category: chance agreement is 1 and kappa undefined.
    CHECK_FALSE(fleiss_kappa({{3, 0}, {3, 0}}).kappa.has_value());
    // Systematic disagreement goes negative.
    CHECK(*fleiss_kappa({{1, 1}, {1, 1}, {1, 1}}).kappa < 0.0);
}

TEST_CASE("fleiss kappa matches the definition on random tables")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t items = 1 + rng() % 30;
        const std::size_t cats = 2 + rng() % 4;
        const std::size_t raters = 2 + rng() % 6;
        std::vector<std::vector<std::size_t>> t(items, std::vector<std::size_t>(cats, 0));
        for (auto& row : t) {
            for (std::size_t r = 0; r < raters; ++r) {
                ++row[rng() % cats];
            }
        }
        const auto k = fleiss_kappa(t);
        if (k.kappa) {
            CHECK(*k.kappa == doctest::Approx(oracle::fleiss(t)).epsilon(1e-9));
        }
    }
}

TEST_CASE("fleiss kappa input checks")
{
    CHECK_THROWS_AS(fleiss_kappa({}), InputError);
    CHECK_THROWS_AS(fleiss_kappa({{2, 1}, {1, 1}}), InputError);
    CHECK_THROWS_AS(fleiss_kappa({{1, 0}}), InputError);
}

TEST_CASE("jaccard similarity over token sets")
{
    CHECK(jaccard_similarity("a b c", "b c d") == 0.5);
    CHECK(jaccard_similarity("The cat", "the CAT the") == 1.0);
    CHECK(jaccard_similarity("", "  ") == 1.0);
    CHECK(jaccard_similarity("x", "") == 0.0);
    CHECK(jaccard_similarity("a b", "c d") == 0.0);
}

TEST_CASE("tokenize and utf-8 decoding")
{
    CHECK(tokenize("  Hello\tWORLD \n again ") == std::vector<std::string>{"hello", "world", "again"});
    CHECK(tokenize("").empty());
    CHECK(decode_utf8("a\xC3\xA9") == U"aé");
    CHECK(decode_utf8("\xE2\x82\xAC") == U"€");
    CHECK(decode_utf8("\xF0\x9F\x98\x80") == U"\U0001F600");
    CHECK(decode_utf8("\xFF") == U"�");
    CHECK(decode_utf8("\xC3") == U"�");
}
