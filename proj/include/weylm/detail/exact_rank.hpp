#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace weylm::detail {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Entries stay integral; every
/// division is exact.
inline int exact_rank(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  std::int64_t prev_pivot = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace weylm::detail
