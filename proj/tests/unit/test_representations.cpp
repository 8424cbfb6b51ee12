#include <doctest.h>

#include <limits>
#include <random>

#include "bhseq/representations.hpp"
#include "oracles.hpp"

using namespace bhseq;
using V = std::vector<Element>;

TEST_CASE("count_representations examples") {
    CHECK(count_representations(V{0, 1}, 2, 1) == 1);
    CHECK(count_representations(V{0, 1, 2}, 2, 2) == 2);
    CHECK(count_representations(V{0, 1, 3, 7}, 2, 10) == 1);
    CHECK(count_representations(V{0, 1, 3, 7}, 2, 5) == 0);
}

TEST_CASE("count_representations accepts unsorted input and rejects bad input") {
    CHECK(count_representations(V{7, 0, 3, 1}, 2, 10) == 1);
    CHECK_THROWS_AS(count_representations(V{0, 1, 1}, 2, 2), InvalidInput);
    CHECK_THROWS_AS(count_representations(V{}, 2, 0), InvalidInput);
    CHECK_THROWS_AS(count_representations(V{0, 1}, 0, 0), InvalidInput);
}

TEST_CASE("sums past 64 bits raise OverflowError") {
    const Element big = std::numeric_limits<Element>::max() / 2 + 1;
    CHECK_THROWS_AS(count_representations(V{0, big}, 2, 0), OverflowError);
    CHECK_THROWS_AS(is_bh_set_bruteforce(V{0, big}, 2), OverflowError);
}

TEST_CASE("is_bh_set_bruteforce examples") {
    CHECK_FALSE(is_bh_set_bruteforce(V{0, 1, 2}, 2));
    CHECK(is_bh_set_bruteforce(V{0}, 5));
    CHECK(is_bh_set_bruteforce(V{0, 1, 3, 7, 12}, 2));
    CHECK(is_bh_set_bruteforce(V{0, 1, 4, 13, 32}, 3));
    CHECK_FALSE(is_bh_set_bruteforce(V{0, 1, 4, 9}, 3));
}

TEST_CASE("first collision is reported in lexicographic order") {
    const auto c = find_collision_bruteforce(V{0, 1, 2}, 2);
    REQUIRE(c.has_value());
    CHECK(c->to_string() == "0+2 = 1+1");
    CHECK(c->sum == 2);
    CHECK_FALSE(find_collision_bruteforce(V{0, 1, 3, 7}, 2).has_value());
}

TEST_CASE("mass conservation: representation counts sum to C(m+h-1, h)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_zero_set(rng, 5, 40);
        const unsigned h = 1 + static_cast<unsigned>(rng() % 4);
        const Element top = h * a.back();
        std::uint64_t total = 0;
        for (Element n = 0; n <= top; ++n) total += count_representations(a, h, n);
        CHECK(total == *binomial(a.size() + h - 1, h));
    }
}

TEST_CASE("brute-force verifier matches the histogram oracle") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testing::random_zero_set(rng, 5, 60);
        const unsigned h = 1 + static_cast<unsigned>(rng() % 4);
        CHECK(is_bh_set_bruteforce(a, h) == testing::is_bh_by_histogram(a, h));
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 3) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(67, 33) == Element{14226520737620288370ULL});
    CHECK_FALSE(binomial(70, 35).has_value());
}
