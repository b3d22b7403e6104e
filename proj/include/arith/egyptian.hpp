#pragma once

#include <vector>

#include "arith/rational.hpp"

namespace arith {

// Greedy unit-fraction expansion of q in (0, 1]: repeatedly take
// ceil(1/remainder). The parts are nondecreasing and sum to q exactly.
std::vector<Int> sylvester_greedy(const Rat& q);

// q = p/s in lowest terms expanded as p copies of 1/s.
std::vector<Int> repeat_denominator(const Rat& q);

// Negative (ceiling) continued fraction of x > 1:
//   x = d1 - 1/(d2 - 1/(...)),  all digits >= 2.
std::vector<Int> hirzebruch_jung(const Rat& x);

}  // namespace arith
