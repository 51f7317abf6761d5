#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace scullen {

// All integer quantities in the library are non-negative GMP integers.
using Natural = mpz_class;

struct FactorEntry {
    Natural prime;
    unsigned exponent;
};

// Primes strictly increasing, exponents >= 1, product reassembles the input.
using Factorization = std::vector<FactorEntry>;

// Thrown when factoring exceeds the configured effort instead of
// returning a partial (and verdict-corrupting) answer.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorBudget {
    unsigned long trial_limit = 1'000'000;
    unsigned long rho_max_iters = 50'000'000;
};

// base^exp, with 0^0 = 1.
Natural ipow(const Natural& base, unsigned long exp);

// Floor k-th root: the unique r with r^k <= n < (r+1)^k.  Newton iteration
// seeded from the bit length; the postcondition is enforced explicitly.
Natural iroot(const Natural& n, unsigned long k);

// Miller-Rabin with a fixed base set: deterministic and correct for all
// n < 3.317e24 (first 12 primes as bases); larger inputs additionally run
// the bases up to 97, leaving no known pseudoprime and a false-positive
// rate far below 4^-25 for random composites.
bool is_probable_prime(const Natural& n);

// Complete factorization via trial division then Brent's rho, with
// probable-prime certification of every cofactor.  Throws BudgetError.
Factorization factor(const Natural& n, const FactorBudget& budget = {});

// Product of the distinct primes dividing n; radical(1) = 1.
Natural radical(const Natural& n, const FactorBudget& budget = {});

// Exact order of x^a versus y^b, no floating point.  Disjoint bit-length
// ranges decide most cases without forming the full powers.
std::strong_ordering power_compare(const Natural& x, unsigned long a,
                                   const Natural& y, unsigned long b);

}  // namespace scullen
