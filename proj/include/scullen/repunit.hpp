#pragma once

#include "scullen/arith.hpp"

namespace scullen {

// The repunit (11...1)_b of length q: value (b^q - 1)/(b - 1).
// b >= 2 and q >= 3 always; q = 2 would make every N a repunit (N-1, 2).
struct RepunitForm {
    Natural base;
    unsigned long length;

    friend bool operator==(const RepunitForm&, const RepunitForm&) = default;
};

// (b^q - 1)/(b - 1), computed by exact division and cross-checked against
// Horner summation.  Rejects b < 2 or q < 3.
Natural repunit_value(const RepunitForm& form);

// Every (b, q) with b >= 2, q >= 3 and repunit value N, sorted by
// increasing q.  For each q the candidate base is pinned to within 1 of
// iroot(N, q-1); lengths stop once the base-2 repunit overshoots N.
// Empty for N < 7 (the smallest admissible repunit).
std::vector<RepunitForm> detect_repunits(const Natural& n);

bool is_repunit(const Natural& n);

}  // namespace scullen
