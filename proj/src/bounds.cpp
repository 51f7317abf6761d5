#include "scullen/bounds.hpp"

namespace scullen {

bool eq1_holds(unsigned long s, unsigned long n)
{
    if (s < 2)
        throw std::invalid_argument("eq1_holds: need s >= 2");
    if (n < 3)
        throw std::invalid_argument("eq1_holds: need n >= 3");
    return power_compare(Natural(s), 3 * n - 7, Natural(n), 4) ==
           std::strong_ordering::less;
}

bool eq3_holds(unsigned long s, unsigned long n)
{
    if (s < 2)
        throw std::invalid_argument("eq3_holds: need s >= 2");
    if (n < 2)
        throw std::invalid_argument("eq3_holds: need n >= 2");
    return power_compare(Natural(s), 11 * n - 21, Natural(n), 10) ==
           std::strong_ordering::less;
}

bool general_q_holds(unsigned long s, unsigned long n, unsigned long q)
{
    if (s < 2)
        throw std::invalid_argument("general_q_holds: need s >= 2");
    if (n < 2)
        throw std::invalid_argument("general_q_holds: need n >= 2");
    if (q < 4)
        throw std::invalid_argument("general_q_holds: need q >= 4");
    // (6q-13)n - 7(q-1) >= 5q - 19 >= 1 for q >= 4, n >= 2
    const unsigned long lhs_exp = (6 * q - 13) * n - 7 * (q - 1);
    return power_compare(Natural(s), lhs_exp, Natural(n), q + 6) ==
           std::strong_ordering::less;
}

namespace {

// Scan one s-column upward in n, collecting cells where `holds` is true.
// Stops after two consecutive failures (the LHS exponent grows linearly in
// n while the RHS is polynomial, so dominance is permanent once entered).
template <typename Holds>
bool scan_column(unsigned long s, unsigned long n_start, unsigned long n_cap,
                 Holds&& holds, std::set<BoundCell>& out)
{
    bool any = false;
    unsigned long consecutive_failures = 0;
    for (unsigned long n = n_start; consecutive_failures < 2; ++n) {
        if (n > n_cap)
            throw BudgetError("exception enumeration hit the n cap at s=" +
                              std::to_string(s) + " before dominance");
        if (holds(s, n)) {
            out.insert({s, n});
            any = true;
            consecutive_failures = 0;
        } else {
            ++consecutive_failures;
        }
    }
    return any;
}

}  // namespace

std::set<BoundCell> enumerate_eq1_exceptions(unsigned long n_cap)
{
    // The inequality is anti-monotone in s for fixed n, so the first fully
    // empty column ends the enumeration (s = 9 in practice).
    std::set<BoundCell> out;
    for (unsigned long s = 2; scan_column(s, 3, n_cap, eq1_holds, out); ++s) {}
    return out;
}

std::set<BoundCell> enumerate_eq3_exceptions(unsigned long n_cap)
{
    std::set<BoundCell> out;
    for (unsigned long s = 2; scan_column(s, 2, n_cap, eq3_holds, out); ++s) {}
    return out;
}

}  // namespace scullen
