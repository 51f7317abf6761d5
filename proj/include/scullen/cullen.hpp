#pragma once

#include "scullen/arith.hpp"

namespace scullen {

// Index of the generalized Cullen number C_{s,n} = n*s^n + 1.
struct CullenIndex {
    unsigned long s;  // base, >= 2
    unsigned long n;  // exponent, >= 1

    friend auto operator<=>(const CullenIndex&, const CullenIndex&) = default;
};

// n * s^n + 1, exact.  Rejects s < 2 or n < 1.
Natural cullen_value(const CullenIndex& idx);

// Streams every cell of the rectangle [s_min, s_max] x [n_min, n_max] in
// the fixed order: s outer ascending, n inner ascending.  Within one s the
// power s^n advances by a single multiplication per step.  Inverted ranges
// yield nothing.
template <typename Visit>
void cullen_range(unsigned long s_min, unsigned long s_max, unsigned long n_min,
                  unsigned long n_max, Visit&& visit)
{
    if (s_min < 2 || n_min < 1)
        throw std::invalid_argument("cullen_range: need s >= 2 and n >= 1");
    for (unsigned long s = s_min; s <= s_max; ++s) {
        Natural power = ipow(Natural(s), n_min);
        for (unsigned long n = n_min; n <= n_max; ++n, power *= s)
            visit(CullenIndex{s, n}, Natural(n * power + 1));
    }
}

}  // namespace scullen
