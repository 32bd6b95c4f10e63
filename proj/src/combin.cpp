#include "mrgrc/combin.hpp"

namespace mrgrc {

std::vector<int> range1(int n) {
  std::vector<int> v(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

static void combinations_rec(const std::vector<int>& pool, size_t start, int want,
                             std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (want == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i + static_cast<size_t>(want) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    combinations_rec(pool, i + 1, want - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur;
  combinations_rec(pool, 0, k, cur, out);
  return out;
}

}  // namespace mrgrc
