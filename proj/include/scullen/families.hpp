#pragma once

#include "scullen/cullen.hpp"
#include "scullen/repunit.hpp"

namespace scullen {

// The two known infinite families of s-Cullen repunits:
//   FamilyA: n = 1 and s+1 is itself a repunit of length >= 3.
//   FamilyB: n = 2 and s^2 is a square triangular number (s >= 6), in which
//            case C_{s,2} = 2s^2 + 1 = b^2 + b + 1 is the length-3 repunit
//            in base b with b(b+1) = 2s^2.
enum class FamilyTag { None, A, B };

struct FamilyBMember {
    std::size_t k;  // 1-based index within the family
    Natural s;
    Natural b;  // base of the length-3 repunit form of C_{s,2}
};

// First `limit` values s >= 2, ascending, with s+1 a repunit.
std::vector<unsigned long> family_a_members(std::size_t limit);

// First `limit` members from the Pell recurrence s_{k+1} = 6 s_k - s_{k-1}
// (seeds 1, 6; members start at s = 6).  Each member's b is recovered from
// b(b+1) = 2s^2 and verified exactly.
std::vector<FamilyBMember> family_b_members(std::size_t limit);

// FamilyA iff n = 1 and s+1 is a repunit; FamilyB iff n = 2, s >= 6 and
// 8s^2 + 1 is a perfect square; otherwise None.
FamilyTag classify(const CullenIndex& idx);

}  // namespace scullen
