#pragma once

#include <cstddef>
#include <vector>

#include "orthomono/field.hpp"

namespace orthomono::detail {

/// In-place reduced row echelon form of a row-major rows x cols array.
/// Returns the pivot columns (one per nonzero row, strictly increasing).
inline std::vector<std::size_t> rref_inplace(const Field& f, std::vector<Elt>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
    const Elt s = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elt factor = a[i * cols + c];
      if (factor == 0) continue;
      const Elt nf = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = f.add(a[i * cols + j], f.mul(nf, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of { v : A v = 0 } read off the reduced echelon form.
inline std::vector<std::vector<Elt>> nullspace(const Field& f, std::vector<Elt> a, std::size_t rows, std::size_t cols) {
  const auto pivots = rref_inplace(f, a, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elt>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elt> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(a[i * cols + free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace orthomono::detail
