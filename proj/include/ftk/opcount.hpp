// Arithmetic-operation tally. Algorithms accept an optional OpCount and
// increment it at every multiply, add/subtract and divide they perform,
// so complexity comparisons use an explicit, reproducible metric.

#ifndef FTK_OPCOUNT_HPP
#define FTK_OPCOUNT_HPP

#include <cstdint>

namespace ftk {

struct OpCount {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;
    std::uint64_t divs = 0;

    std::uint64_t total() const { return mults + adds + divs; }

    OpCount& operator+=(const OpCount& o) {
        mults += o.mults;
        adds += o.adds;
        divs += o.divs;
        return *this;
    }
};

} // namespace ftk

#endif
