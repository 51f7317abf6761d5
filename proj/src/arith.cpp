#include "scullen/arith.hpp"

#include <algorithm>
#include <map>

namespace scullen {

Natural ipow(const Natural& base, unsigned long exp)
{
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Natural iroot(const Natural& n, unsigned long k)
{
    if (k == 0)
        throw std::invalid_argument("iroot: k must be >= 1");
    if (n < 0)
        throw std::invalid_argument("iroot: negative input");
    if (k == 1 || n <= 1)
        return n;

    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (k >= bits)
        return 1;  // 2^k > n, so the root is 1

    // Seed at 2^ceil(bits/k) >= true root; Newton descends monotonically.
    Natural r = 1;
    r <<= (bits + k - 1) / k;
    for (;;) {
        Natural t = ((k - 1) * r + n / ipow(r, k - 1)) / k;
        if (t >= r)
            break;
        r = t;
    }
    while (ipow(r, k) > n)
        --r;
    while (ipow(r + 1, k) <= n)
        ++r;
    return r;
}

namespace {

bool miller_rabin_witness(const Natural& n, const Natural& d, unsigned long s,
                          unsigned long base)
{
    Natural a = base;
    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return false;
    }
    return true;  // composite witness
}

constexpr unsigned long kSmallBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr unsigned long kExtraBases[] = {41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

bool is_probable_prime(const Natural& n)
{
    if (n < 2)
        return false;
    for (unsigned long p : kSmallBases) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }

    Natural d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    for (unsigned long b : kSmallBases)
        if (miller_rabin_witness(n, d, s, b))
            return false;

    // Deterministic threshold for the 12-prime base set.
    static const Natural kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound)
        return true;

    for (unsigned long b : kExtraBases)
        if (miller_rabin_witness(n, d, s, b))
            return false;
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho.  Returns a nontrivial factor of the
// odd composite n, or throws when the iteration budget runs out.
Natural rho_brent(const Natural& n, const FactorBudget& budget)
{
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xC011EEul);  // fixed seed: runs are reproducible

    unsigned long iters = 0;
    for (unsigned long c = 1;; ++c) {
        Natural y = rng.get_z_range(n - 3) + 2;
        Natural x = y, q = 1, g = 1, ys = y;
        const unsigned long m = 128;
        for (unsigned long r = 1; g == 1; r <<= 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                iters += lim;
                if (iters > budget.rho_max_iters)
                    throw BudgetError("factorization budget exceeded (rho) on " +
                                      n.get_str());
            }
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Natural diff = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        // cycle degenerated; retry with the next polynomial constant
    }
}

void factor_into(const Natural& n, std::map<Natural, unsigned>& out,
                 const FactorBudget& budget)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Natural f = rho_brent(n, budget);
    factor_into(f, out, budget);
    factor_into(n / f, out, budget);
}

}  // namespace

Factorization factor(const Natural& n, const FactorBudget& budget)
{
    if (n < 1)
        throw std::invalid_argument("factor: input must be >= 1");

    std::map<Natural, unsigned> acc;
    Natural m = n;

    for (unsigned long e = 0; mpz_even_p(m.get_mpz_t()); ++e) {
        m >>= 1;
        ++acc[2];
    }
    for (unsigned long d = 3; d <= budget.trial_limit; d += 2) {
        if (Natural(d) * d > m)
            break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            m /= d;
            ++acc[d];
        }
    }
    if (m > 1) {
        if (Natural(budget.trial_limit) * budget.trial_limit > m) {
            ++acc[m];  // below the trial square, so prime
        } else {
            factor_into(m, acc, budget);
        }
    }

    Factorization out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc)
        out.push_back({p, e});
    return out;
}

Natural radical(const Natural& n, const FactorBudget& budget)
{
    Natural r = 1;
    for (const auto& fe : factor(n, budget))
        r *= fe.prime;
    return r;
}

std::strong_ordering power_compare(const Natural& x, unsigned long a,
                                   const Natural& y, unsigned long b)
{
    // Normalize the trivial values 0 and 1.
    const bool lhs_one = (a == 0 || x == 1);
    const bool rhs_one = (b == 0 || y == 1);
    if (lhs_one && rhs_one)
        return std::strong_ordering::equal;
    if (lhs_one)
        return y == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (rhs_one)
        return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x == 0 && y == 0)
        return std::strong_ordering::equal;
    if (x == 0)
        return std::strong_ordering::less;
    if (y == 0)
        return std::strong_ordering::greater;

    // x^a lies in [2^(a(bx-1)), 2^(a*bx)); disjoint ranges decide without powering.
    const unsigned long bx = mpz_sizeinbase(x.get_mpz_t(), 2);
    const unsigned long by = mpz_sizeinbase(y.get_mpz_t(), 2);
    if (a * (bx - 1) >= b * by)
        return std::strong_ordering::greater;
    if (b * (by - 1) >= a * bx)
        return std::strong_ordering::less;

    const Natural lhs = ipow(x, a);
    const Natural rhs = ipow(y, b);
    const int c = cmp(lhs, rhs);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

}  // namespace scullen
