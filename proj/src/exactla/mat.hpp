#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "exactla/scalar.hpp"

namespace ncm::la {

// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(size_t n);
  static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }
  // Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Mat from_columns(const std::vector<Vec>& cols, size_t rows);
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec column(size_t c) const;
  void set_column(size_t c, const Vec& v);
  std::vector<Vec> columns() const;

  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;
  bool operator==(const Mat& o) const = default;

  // Columns [c0, c0 + n).
  Mat column_block(size_t c0, size_t n) const;
  Mat hstack(const Mat& o) const;
  Mat vstack(const Mat& o) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<size_t> pivots;
  size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination with the leftmost nonzero pivot in each column.
RrefResult rref(const Mat& m);
size_t rank(const Mat& m);

// Columns form a basis of {x : m x = 0}; one basis vector per free column,
// with a 1 in that free coordinate.
Mat kernel_basis(const Mat& m);

// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Solves a X = B column by column; nullopt if any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

// Indices of a maximal linearly independent prefix-greedy subset of columns.
std::vector<size_t> independent_columns(const Mat& m);

// Submatrix of the independent columns chosen by independent_columns.
Mat column_space_basis(const Mat& m);

// Coordinates of a vector in the quotient k^n / span(S).
// projection: q x n, section: n x q, and projection * section = I_q.
struct QuotientMap {
  Mat projection;
  Mat section;
  size_t dim() const { return projection.rows(); }
};

// `spanning` holds spanning vectors of the subspace as columns (n rows).
QuotientMap quotient_by(const Mat& spanning, size_t ambient);

// Intersection of the column spans of two matrices with the same row count;
// result columns form a basis.
Mat intersect_spans(const Mat& a, const Mat& b);

}  // namespace ncm::la
