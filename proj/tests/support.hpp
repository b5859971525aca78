#pragma once

#include "liouville/arith_table.hpp"
#include "liouville/complex.hpp"

#include <cmath>

namespace test_support {

// Full-size table shared by every case in a binary.
inline const liouville::ArithTable& big_table() {
    static const liouville::ArithTable table = liouville::ArithTable::build(2'000'001);
    return table;
}

inline double rel(liouville::Complex a, liouville::Complex b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace test_support
