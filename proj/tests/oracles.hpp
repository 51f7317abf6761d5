// Brute-force oracles used by the tests.  Deliberately independent of the
// library's detection path: plain loops, no integer roots, no windows.
#pragma once

#include "scullen/repunit.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace scullen::test {

// All repunit forms with value <= limit, by direct Horner evaluation over
// every base and length.
inline std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, unsigned long>>>
brute_repunit_table(std::uint64_t limit)
{
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, unsigned long>>> table;
    for (std::uint64_t b = 2; b * b + b + 1 <= limit; ++b) {
        std::uint64_t v = b * b + b + 1;  // length 3
        for (unsigned long q = 3; v <= limit; ++q) {
            table[v].push_back({b, q});
            if (v > limit / b)
                break;
            v = v * b + 1;
        }
    }
    // sort each entry by increasing length, the library's documented order
    for (auto& [v, forms] : table)
        std::sort(forms.begin(), forms.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });
    return table;
}

// Repunit forms of one value by scanning every base up to N.
inline std::vector<std::pair<std::uint64_t, unsigned long>>
brute_detect(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned long>> forms;
    for (std::uint64_t b = 2; b * b + b + 1 <= n; ++b) {
        std::uint64_t v = 1;
        unsigned long q = 1;
        while (v < n && v <= n / b) {
            v = v * b + 1;
            ++q;
        }
        if (v == n && q >= 3)
            forms.push_back({b, q});
    }
    std::sort(forms.begin(), forms.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    return forms;
}

// Ascending s <= limit with 8s^2+1 a perfect square (s^2 triangular),
// checked by a climbing square root rather than any root primitive.
inline std::vector<std::uint64_t> brute_square_triangular_s(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    std::uint64_t r = 1;
    for (std::uint64_t s = 1; s <= limit; ++s) {
        const std::uint64_t d = 8 * s * s + 1;
        while (r * r < d)
            ++r;
        if (r * r == d && s >= 6)
            out.push_back(s);
    }
    return out;
}

}  // namespace scullen::test
