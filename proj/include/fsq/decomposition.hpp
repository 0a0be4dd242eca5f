#pragma once

#include "fsq/arith.hpp"

namespace fsq {

enum class SolvePath { constructive, oracle };

// A witness for n = x^2+y^2+z^2+w^2 with a*x + b*y = m^2.
struct Decomposition {
    i64 n = 0;
    i64 x = 0, y = 0, z = 0, w = 0;
    i64 m = 0;
    i64 delta = 0;  // 16-power split used by the constructive path
    SolvePath path = SolvePath::oracle;
};

}  // namespace fsq
