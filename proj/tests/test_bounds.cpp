#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scullen/bounds.hpp"

#include <cmath>
#include <random>

using namespace scullen;

TEST_CASE("eq1 examples")
{
    CHECK_FALSE(eq1_holds(9, 3));  // the equality edge 9^2 = 3^4
    CHECK(eq1_holds(2, 5));
    CHECK_FALSE(eq1_holds(2, 6));
    CHECK_THROWS_AS(eq1_holds(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(eq1_holds(1, 3), std::invalid_argument);
}

TEST_CASE("eq3 examples")
{
    CHECK_FALSE(eq3_holds(3, 3));
    CHECK(eq3_holds(2, 3));
    CHECK(eq3_holds(1023, 2));
    CHECK_FALSE(eq3_holds(1024, 2));  // the equality edge s^1 = 2^10
    CHECK_THROWS_AS(eq3_holds(2, 1), std::invalid_argument);
}

TEST_CASE("general q examples")
{
    CHECK_FALSE(general_q_holds(2, 3, 5));  // 2^23 vs 3^11
    CHECK(general_q_holds(2, 2, 4));        // 2^1 < 2^10
    CHECK_THROWS_AS(general_q_holds(2, 2, 3), std::invalid_argument);
}

TEST_CASE("q = 4 specializes to eq3")
{
    for (unsigned long s = 2; s <= 50; ++s)
        for (unsigned long n = 2; n <= 20; ++n)
            CHECK(general_q_holds(s, n, 4) == eq3_holds(s, n));
}

TEST_CASE("eq1 exception set")
{
    const std::set<BoundCell> expect{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4},
                                     {4, 3}, {5, 3}, {6, 3}, {7, 3}, {8, 3}};
    const auto got = enumerate_eq1_exceptions();
    CHECK(got == expect);
    for (const auto& [s, n] : got)
        CHECK(s < 9);
}

TEST_CASE("eq3 exception set")
{
    const auto got = enumerate_eq3_exceptions();
    std::set<BoundCell> expect{{2, 3}};
    for (unsigned long s = 2; s <= 1023; ++s)
        expect.insert({s, 2});
    CHECK(got == expect);
}

TEST_CASE("anti-monotone in s, once false stays false")
{
    for (unsigned long n = 3; n <= 32; ++n) {
        bool seen_false = false;
        for (unsigned long s = 2; s <= 32; ++s) {
            const bool h = eq1_holds(s, n);
            if (seen_false)
                CHECK_FALSE(h);
            seen_false = seen_false || !h;
        }
    }
    for (unsigned long n = 2; n <= 32; ++n) {
        bool seen_false = false;
        for (unsigned long s = 2; s <= 32; ++s) {
            const bool h = eq3_holds(s, n);
            if (seen_false)
                CHECK_FALSE(h);
            seen_false = seen_false || !h;
        }
    }
}

TEST_CASE("monotone in q, once false stays false")
{
    for (unsigned long s = 2; s <= 10; ++s) {
        for (unsigned long n = 3; n <= 10; ++n) {
            bool seen_false = false;
            for (unsigned long q = 4; q <= 32; ++q) {
                const bool h = general_q_holds(s, n, q);
                if (seen_false)
                    CHECK_FALSE(h);
                seen_false = seen_false || !h;
            }
        }
    }
}

TEST_CASE("exact verdicts match floating logarithms away from ties")
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<unsigned long> sd(2, 500), nd(3, 60);
    int checked = 0;
    for (int i = 0; i < 1000 && checked < 500; ++i) {
        const unsigned long s = sd(rng), n = nd(rng);
        const double margin =
            (3.0 * n - 7.0) * std::log(static_cast<double>(s)) -
            4.0 * std::log(static_cast<double>(n));
        if (std::fabs(margin) < 1e-6)
            continue;  // too close to the strict boundary for doubles
        CHECK(eq1_holds(s, n) == (margin < 0));
        ++checked;
    }
    CHECK(checked == 500);
}
