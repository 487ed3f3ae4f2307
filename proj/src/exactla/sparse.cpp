#include "exactla/sparse.hpp"

#include <algorithm>

namespace ncm::la {

namespace {

const Scalar* find(const SparseRow& r, size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, size_t c) { return e.first < c; });
  return it != r.end() && it->first == col ? &it->second : nullptr;
}

// a - f * b
SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add(SparseRow row) {
  for (const auto& [p, prow] : rows_) {
    if (const Scalar* c = find(row, p)) row = axpy(row, Scalar(*c), prow);
  }
  if (row.empty()) return false;
  const size_t pivot = row.front().first;
  const Scalar lead = row.front().second;
  for (auto& e : row) e.second /= lead;
  for (auto& [p, prow] : rows_)
    if (const Scalar* c = find(prow, pivot)) prow = axpy(prow, Scalar(*c), row);
  rows_.emplace(pivot, std::move(row));
  return true;
}

Mat SparseEchelon::kernel_basis() const {
  std::vector<Vec> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (rows_.count(free)) continue;
    Vec v(cols_);
    v[free] = 1;
    for (const auto& [p, prow] : rows_)
      if (const Scalar* c = find(prow, free)) v[p] = -*c;
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(basis, cols_);
}

}  // namespace ncm::la
