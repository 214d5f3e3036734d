#pragma once

#include <vector>

#include "medalg/algebra.hpp"

namespace medalg {

/// Chain 0 < 1 < ... < n-1; the median picks the middle value.
MedianAlgebra chain(int n);

/// Bottom element 0 with `arms` pairwise incomparable atoms 1..arms.
MedianAlgebra star(int arms);

/// Rooted tree as a meet-semilattice with the root 0 as bottom.
/// parents[i] is the parent of element i+1 and must satisfy parents[i] <= i.
MedianAlgebra tree_from_parents(const std::vector<int>& parents);

}  // namespace medalg
