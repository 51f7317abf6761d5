#pragma once

#include "scullen/arith.hpp"

namespace scullen {

// Coprime positive integers with a + b = c.
struct AbcTriple {
    Natural a;
    Natural b;
    Natural c;
};

// The abc exponent 1 + eps as the rational num/den; the proof fixes
// eps = 1/6, hence the default 7/6.
struct AbcExponent {
    unsigned long num = 7;
    unsigned long den = 6;
};

struct AbcReport {
    AbcTriple triple;
    Natural rad_abc;
    bool exceptional;            // c^den >= rad^num, exact
    std::string quality_approx;  // log(c)/log(rad(abc)), 4 decimals, display only
};

// Exact exceptionality check plus display-quality approximation.  Rejects
// non-summing or non-coprime inputs; factorization budget errors propagate.
AbcReport abc_check(const AbcTriple& t, const AbcExponent& eps = {},
                    const FactorBudget& budget = {});

// The triple (b, 1, b+1) behind the length-3 repunit bound: its radical is
// rad(b(b+1)).
AbcTriple case1_triple(const Natural& b);

// The triple (b^{q-1} - 1, 1, b^{q-1}) behind the length-q bound; the
// radical of its product equals rad(b(b^{q-1}-1)).
AbcTriple case2_triple(const Natural& b, unsigned long q);

// All b in [2, b_max] with (b+1)^6 >= rad(b(b+1))^7, ascending, each with
// its full report.
std::vector<AbcReport> scan_case1_exceptions(unsigned long b_max,
                                             const FactorBudget& budget = {});

}  // namespace scullen
