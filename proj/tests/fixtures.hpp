#pragma once

#include "ybcs/cycle_set.hpp"

namespace ybcs::testing {

// The 4-element irretractable cycle set with dihedral permutation
// group of order 8, given by sigma(1)=(2,4), sigma(2)=(1,2,3,4),
// sigma(3)=(1,4,3,2), sigma(4)=(1,3) in 1-based cycle notation.
inline CycleSet example2() {
  return CycleSet::validate({{0, 3, 2, 1},
                             {1, 2, 3, 0},
                             {3, 0, 1, 2},
                             {2, 1, 0, 3}});
}

// The 2-element indecomposable cycle set: both rows the transposition.
inline CycleSet indecomposable2() {
  return CycleSet::validate({{1, 0}, {1, 0}});
}

}  // namespace ybcs::testing
