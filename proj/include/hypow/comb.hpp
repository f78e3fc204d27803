// Small combinatorial iteration helpers shared across modules.
#ifndef HYPOW_COMB_HPP
#define HYPOW_COMB_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hypow {

// Visits every size-`r` subset of `elems` (kept in the given order) as a
// vector.  `f` returns false to abort early; for_each_subset returns false
// iff aborted.
template <class F>
bool for_each_subset(const std::vector<int>& elems, int r, F&& f) {
  const int m = static_cast<int>(elems.size());
  if (r < 0 || r > m) return true;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  std::vector<int> pick(r);
  while (true) {
    for (int i = 0; i < r; ++i) pick[i] = elems[idx[i]];
    if (!f(pick)) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int t = i + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Visits every permutation of `elems` (sorted first, so coverage is full
// regardless of input order).
template <class F>
bool for_each_permutation(std::vector<int> elems, F&& f) {
  std::sort(elems.begin(), elems.end());
  do {
    if (!f(elems)) return false;
  } while (std::next_permutation(elems.begin(), elems.end()));
  return true;
}

}  // namespace hypow

#endif
