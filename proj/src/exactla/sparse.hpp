#pragma once

#include <map>
#include <utility>
#include <vector>

#include "exactla/mat.hpp"

namespace ncm::la {

// Sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<size_t, Scalar>>;

// Reduced row echelon form grown one equation at a time. Meant for large,
// very sparse homogeneous systems where dense elimination wastes time on
// zero rationals.
class SparseEchelon {
 public:
  explicit SparseEchelon(size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of the earlier ones.
  bool add(SparseRow row);
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  // Same convention as kernel_basis: one column per free variable.
  Mat kernel_basis() const;

 private:
  size_t cols_;
  std::map<size_t, SparseRow> rows_;  // pivot -> row with 1 at the pivot
};

}  // namespace ncm::la
