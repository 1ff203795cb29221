#pragma once

#include <vector>

#include "ga/rational.hpp"

namespace ga {

// Exact rank of a dense rational matrix by Gaussian elimination.
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const Rational pivot = rows[pivot_row][col];
    for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Rational factor = rows[r][col] / pivot;
      for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

}  // namespace ga
