#pragma once

#include "scullen/arith.hpp"

#include <set>
#include <utility>

namespace scullen {

// The exclusion inequalities from the finiteness proof, decided exactly in
// integer arithmetic.  Both sides are strict; equality cases (s=9 n=3,
// s=1024 n=2) therefore fail.

// 3n - 7 < 4 log_s(n), decided as s^(3n-7) < n^4.  Requires s >= 2, n >= 3.
bool eq1_holds(unsigned long s, unsigned long n);

// 11n - 21 < 10 log_s(n), decided as s^(11n-21) < n^10.  Requires s >= 2, n >= 2.
bool eq3_holds(unsigned long s, unsigned long n);

// The length-q generalization, decided as s^((6q-13)n - 7(q-1)) < n^(q+6)
// after clearing the positive denominator 6q-13.  Requires q >= 4; q = 4
// specializes to eq3_holds.
bool general_q_holds(unsigned long s, unsigned long n, unsigned long q);

using BoundCell = std::pair<unsigned long, unsigned long>;  // (s, n)

// The complete finite sets of (s, n) satisfying the inequalities.  The
// per-column scan stops once exponent dominance is observed; hitting
// `n_cap` first means finiteness was not witnessed and is an error.
std::set<BoundCell> enumerate_eq1_exceptions(unsigned long n_cap = 1024);
std::set<BoundCell> enumerate_eq3_exceptions(unsigned long n_cap = 1024);

}  // namespace scullen
