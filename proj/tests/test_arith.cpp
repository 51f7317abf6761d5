#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scullen/arith.hpp"

#include <random>

using namespace scullen;

TEST_CASE("ipow basics")
{
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(0, 0) == 1);
    CHECK(ipow(7, 0) == 1);
    CHECK(ipow(0, 5) == 0);

    // repeated-multiplication oracle for 10^60
    Natural expected = 1;
    for (int i = 0; i < 60; ++i)
        expected *= 10;
    CHECK(ipow(10, 60) == expected);
    CHECK(ipow(10, 60).get_str().size() == 61);
}

TEST_CASE("iroot examples")
{
    CHECK(iroot(73, 2) == 8);
    CHECK(iroot(31, 4) == 2);
    CHECK(iroot(0, 7) == 0);
    CHECK(iroot(1, 7) == 1);
    CHECK(iroot(Natural("123456789123456789"), 1) == Natural("123456789123456789"));
    CHECK_THROWS_AS(iroot(5, 0), std::invalid_argument);
}

TEST_CASE("iroot postcondition on a grid")
{
    // exhaustive small grid; the full stated range runs in the acceptance suite
    for (unsigned long n = 0; n <= 3000; ++n) {
        for (unsigned long k = 1; k <= 8; ++k) {
            const Natural r = iroot(n, k);
            CHECK(ipow(r, k) <= n);
            CHECK(ipow(r + 1, k) > n);
        }
    }
    // large values around exact powers
    for (unsigned long k = 2; k <= 20; ++k) {
        const Natural base = Natural("10000000000000000000007");
        const Natural p = ipow(base, k);
        CHECK(iroot(p, k) == base);
        CHECK(iroot(p - 1, k) == base - 1);
        CHECK(iroot(p + 1, k) == base);
    }
}

TEST_CASE("is_probable_prime")
{
    CHECK(is_probable_prime(2));
    CHECK_FALSE(is_probable_prime(0));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(2451));  // 3 * 19 * 43
    CHECK_FALSE(is_probable_prime(561));   // Carmichael
    CHECK(is_probable_prime(Natural("618970019642690137449562111")));  // 2^89 - 1

    // trial-division oracle
    for (unsigned long n = 0; n <= 5000; ++n) {
        bool prime = n >= 2;
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        CHECK(is_probable_prime(n) == prime);
    }
}

TEST_CASE("factor examples")
{
    const Factorization f90 = factor(90);
    REQUIRE(f90.size() == 3);
    CHECK(f90[0].prime == 2);
    CHECK(f90[0].exponent == 1);
    CHECK(f90[1].prime == 3);
    CHECK(f90[1].exponent == 2);
    CHECK(f90[2].prime == 5);
    CHECK(f90[2].exponent == 1);

    CHECK(factor(1).empty());

    const Factorization f72 = factor(72);
    REQUIRE(f72.size() == 2);
    CHECK(f72[0].prime == 2);
    CHECK(f72[0].exponent == 3);
    CHECK(f72[1].prime == 3);
    CHECK(f72[1].exponent == 2);

    CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor reassembles, primes certified and increasing")
{
    for (unsigned long n = 1; n <= 20000; ++n) {
        const Factorization f = factor(n);
        Natural prod = 1;
        Natural last = 1;
        for (const auto& fe : f) {
            CHECK(fe.prime > last);
            CHECK(fe.exponent >= 1);
            CHECK(is_probable_prime(fe.prime));
            prod *= ipow(fe.prime, fe.exponent);
            last = fe.prime;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("factor beyond the trial range uses rho")
{
    const Natural p("1000000007");
    const Natural q("1000000009");
    const Factorization f = factor(p * q);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == p);
    CHECK(f[1].prime == q);
}

TEST_CASE("factorization budget is an explicit error")
{
    FactorBudget tiny;
    tiny.trial_limit = 100;
    tiny.rho_max_iters = 8;
    const Natural hard = Natural("2305843009213693951") * Natural("618970019642690137449562111");
    CHECK_THROWS_AS(factor(hard, tiny), BudgetError);
}

TEST_CASE("radical examples and properties")
{
    CHECK(radical(90) == 30);
    CHECK(radical(97) == 97);
    CHECK(radical(72) == 6);
    CHECK(radical(1) == 1);

    for (unsigned long n = 1; n <= 5000; ++n) {
        const Natural r = radical(n);
        CHECK(n % r == 0);
        // squarefree: no prime appears twice
        for (const auto& fe : factor(r))
            CHECK(fe.exponent == 1);
        CHECK(radical(r) == r);
    }
}

TEST_CASE("power_compare examples")
{
    CHECK(power_compare(9, 2, 3, 4) == std::strong_ordering::equal);
    CHECK(power_compare(2, 11, 6, 4) == std::strong_ordering::greater);
    CHECK(power_compare(1024, 1, 2, 10) == std::strong_ordering::equal);
    CHECK(power_compare(2, 0, 1, 5) == std::strong_ordering::equal);  // 1 vs 1
    CHECK(power_compare(0, 3, 2, 1) == std::strong_ordering::less);
    CHECK(power_compare(0, 0, 0, 4) == std::strong_ordering::greater);  // 1 vs 0
}

TEST_CASE("power_compare agrees with expanded powers")
{
    std::mt19937_64 rng(20250825);
    std::uniform_int_distribution<unsigned long> vals(0, 2000), exps(0, 16);
    for (int i = 0; i < 1000; ++i) {
        const unsigned long x = vals(rng), y = vals(rng);
        const unsigned long a = exps(rng), b = exps(rng);
        const int direct = cmp(ipow(x, a), ipow(y, b));
        const auto pc = power_compare(x, a, y, b);
        if (direct < 0)
            CHECK(pc == std::strong_ordering::less);
        else if (direct > 0)
            CHECK(pc == std::strong_ordering::greater);
        else
            CHECK(pc == std::strong_ordering::equal);
    }
}
