#include "scullen/repunit.hpp"

namespace scullen {

Natural repunit_value(const RepunitForm& form)
{
    if (form.base < 2 || form.length < 3)
        throw std::invalid_argument("repunit_value: need b >= 2 and q >= 3");

    Natural by_division = (ipow(form.base, form.length) - 1) / (form.base - 1);

    Natural horner = 1;
    for (unsigned long j = 1; j < form.length; ++j)
        horner = horner * form.base + 1;

    if (by_division != horner)
        throw std::logic_error("repunit_value: division/Horner mismatch");
    return by_division;
}

std::vector<RepunitForm> detect_repunits(const Natural& n)
{
    std::vector<RepunitForm> forms;
    if (n < 7)
        return forms;  // smallest length-3 repunit is (111)_2 = 7

    // Length q is feasible while the base-2 repunit 2^q - 1 still fits.
    Natural min_repunit = 7;  // 2^3 - 1
    for (unsigned long q = 3; min_repunit <= n; ++q, min_repunit = 2 * min_repunit + 1) {
        const Natural r = iroot(n, q - 1);
        for (int d = -1; d <= 1; ++d) {
            const Natural b = r + d;
            if (b < 2)
                continue;
            // R(b,q) = n  <=>  b^q - 1 = n(b - 1)
            if (ipow(b, q) - 1 == n * (b - 1)) {
                forms.push_back({b, q});
                break;  // the repunit value is strictly increasing in b
            }
        }
    }
    return forms;
}

bool is_repunit(const Natural& n)
{
    return !detect_repunits(n).empty();
}

}  // namespace scullen
