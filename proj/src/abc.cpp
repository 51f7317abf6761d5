#include "scullen/abc.hpp"

#include <mpfr.h>

namespace scullen {

namespace {

std::string format_ratio(const Natural& c, const Natural& rad, mpfr_prec_t prec,
                         mpfr_rnd_t rnd)
{
    mpfr_t num, den;
    mpfr_init2(num, prec);
    mpfr_init2(den, prec);
    mpfr_set_z(num, c.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(den, rad.get_mpz_t(), MPFR_RNDN);
    mpfr_log(num, num, rnd);
    mpfr_log(den, den, rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD);
    mpfr_div(num, num, den, rnd);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.4R*f", rnd, num);
    mpfr_clear(num);
    mpfr_clear(den);
    return buf;
}

// log(c)/log(rad) to 4 decimals; precision is raised until the two
// directed roundings print the same digits.
std::string quality_approx(const Natural& c, const Natural& rad)
{
    for (mpfr_prec_t prec = 128; prec <= 8192; prec *= 2) {
        std::string lo = format_ratio(c, rad, prec, MPFR_RNDD);
        std::string hi = format_ratio(c, rad, prec, MPFR_RNDU);
        if (lo == hi)
            return lo;
    }
    // value sits on a rounding boundary; either direction is correct to 4 places
    return format_ratio(c, rad, 8192, MPFR_RNDN);
}

}  // namespace

AbcReport abc_check(const AbcTriple& t, const AbcExponent& eps,
                    const FactorBudget& budget)
{
    if (t.a < 1 || t.b < 1)
        throw std::invalid_argument("abc_check: a and b must be positive");
    if (t.a + t.b != t.c)
        throw std::invalid_argument("abc_check: a + b != c");
    Natural g;
    mpz_gcd(g.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("abc_check: a and b are not coprime");

    const Natural rad = radical(t.a * t.b * t.c, budget);
    const bool exceptional =
        power_compare(t.c, eps.den, rad, eps.num) != std::strong_ordering::less;
    return {t, rad, exceptional, quality_approx(t.c, rad)};
}

AbcTriple case1_triple(const Natural& b)
{
    if (b < 2)
        throw std::invalid_argument("case1_triple: need b >= 2");
    return {b, 1, b + 1};
}

AbcTriple case2_triple(const Natural& b, unsigned long q)
{
    if (b < 2)
        throw std::invalid_argument("case2_triple: need b >= 2");
    if (q < 4)
        throw std::invalid_argument("case2_triple: need q >= 4");
    const Natural p = ipow(b, q - 1);
    return {p - 1, 1, p};
}

std::vector<AbcReport> scan_case1_exceptions(unsigned long b_max,
                                             const FactorBudget& budget)
{
    std::vector<AbcReport> out;
    Natural rad_b = radical(2, budget);  // rad of the current b, reused pairwise
    for (unsigned long b = 2; b <= b_max; ++b) {
        Natural rad_next;
        try {
            rad_next = radical(Natural(b) + 1, budget);
        } catch (const BudgetError&) {
            throw BudgetError("scan_case1_exceptions: budget exceeded at b=" +
                              std::to_string(b));
        }
        // rad(b(b+1)) = rad(b) rad(b+1), the factors being coprime
        const Natural rad = rad_b * rad_next;
        if (power_compare(Natural(b) + 1, 6, rad, 7) != std::strong_ordering::less)
            out.push_back(abc_check(case1_triple(b), {}, budget));
        rad_b = std::move(rad_next);
    }
    return out;
}

}  // namespace scullen
