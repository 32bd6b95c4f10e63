#pragma once

#include <vector>

namespace mrgrc {

/// {1, 2, ..., n}.
std::vector<int> range1(int n);

/// All size-k subsets of pool, in lexicographic order of positions.
std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k);

}  // namespace mrgrc
