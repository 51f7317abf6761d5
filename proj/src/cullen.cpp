#include "scullen/cullen.hpp"

namespace scullen {

Natural cullen_value(const CullenIndex& idx)
{
    if (idx.s < 2)
        throw std::invalid_argument("cullen_value: need s >= 2");
    if (idx.n < 1)
        throw std::invalid_argument("cullen_value: need n >= 1");
    return idx.n * ipow(Natural(idx.s), idx.n) + 1;
}

}  // namespace scullen
