#include "scullen/families.hpp"

namespace scullen {

std::vector<unsigned long> family_a_members(std::size_t limit)
{
    if (limit < 1)
        throw std::invalid_argument("family_a_members: limit must be >= 1");
    std::vector<unsigned long> out;
    for (unsigned long s = 2; out.size() < limit; ++s)
        if (is_repunit(Natural(s) + 1))
            out.push_back(s);
    return out;
}

std::vector<FamilyBMember> family_b_members(std::size_t limit)
{
    if (limit < 1)
        throw std::invalid_argument("family_b_members: limit must be >= 1");
    std::vector<FamilyBMember> out;
    out.reserve(limit);
    Natural prev = 1, cur = 6;  // s = 1 solves the Pell recurrence but is degenerate
    for (std::size_t k = 1; k <= limit; ++k) {
        const Natural s = cur;
        const Natural b = (iroot(8 * s * s + 1, 2) - 1) / 2;
        if (2 * s * s + 1 != b * b + b + 1)
            throw std::logic_error("family_b_members: invariant 2s^2+1 = b^2+b+1 failed at s=" +
                                   s.get_str());
        out.push_back({k, s, b});
        const Natural next = 6 * cur - prev;
        prev = cur;
        cur = next;
    }
    return out;
}

FamilyTag classify(const CullenIndex& idx)
{
    if (idx.s < 2 || idx.n < 1)
        throw std::invalid_argument("classify: need s >= 2 and n >= 1");
    if (idx.n == 1)
        return is_repunit(Natural(idx.s) + 1) ? FamilyTag::A : FamilyTag::None;
    if (idx.n == 2 && idx.s >= 6) {
        const Natural d = 8 * Natural(idx.s) * idx.s + 1;
        const Natural r = iroot(d, 2);
        if (r * r == d)
            return FamilyTag::B;
    }
    return FamilyTag::None;
}

}  // namespace scullen
