#include "exactla/mat.hpp"

#include <sstream>
#include <stdexcept>

namespace ncm::la {

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, size_t rows) {
  Mat m(rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Mat m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::column(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_column(size_t c, const Vec& v) {
  for (size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<Vec> Mat::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat p(rows_, o.cols_);
  Scalar tmp;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (sgn(b) == 0) continue;
        tmp = a * b;
        p(i, j) += tmp;
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat s(*this);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Mat s(*this);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Mat Mat::scaled(const Scalar& f) const {
  Mat s(*this);
  for (auto& x : s.data_) x *= f;
  return s;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(rows_);
  Scalar tmp;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) == 0 || sgn((*this)(r, c)) == 0) continue;
      tmp = (*this)(r, c) * v[c];
      out[r] += tmp;
    }
  return out;
}

Mat Mat::column_block(size_t c0, size_t n) const {
  Mat b(rows_, n);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < n; ++c) b(r, c) = (*this)(r, c0 + c);
  return b;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0) throw std::invalid_argument("hstack row mismatch");
  const size_t rows = cols_ == 0 ? o.rows_ : rows_;
  Mat m(rows, cols_ + o.cols_);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (size_t c = 0; c < o.cols_; ++c) m(r, cols_ + c) = o(r, c);
  }
  return m;
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0) throw std::invalid_argument("vstack column mismatch");
  const size_t cols = rows_ == 0 ? o.cols_ : cols_;
  Mat m(rows_ + o.rows_, cols);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols; ++c) m(r, c) = (*this)(r, c);
  for (size_t r = 0; r < o.rows_; ++r)
    for (size_t c = 0; c < cols; ++c) m(rows_ + r, c) = o(r, c);
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// In-place reduction of a row list; returns pivot columns.
std::vector<size_t> reduce_rows(std::vector<Vec>& rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t lead = 0;
  Scalar f, tmp;
  for (size_t c = 0; c < cols && lead < rows.size(); ++c) {
    size_t p = lead;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead]);
    Vec& prow = rows[lead];
    if (prow[c] != 1) {
      const Scalar inv = 1 / prow[c];
      for (size_t j = c; j < cols; ++j)
        if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][c]) == 0) continue;
      f = rows[r][c];
      Vec& row = rows[r];
      for (size_t j = c; j < cols; ++j) {
        if (sgn(prow[j]) == 0) continue;
        tmp = f * prow[j];
        row[j] -= tmp;
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::vector<Vec> rows_of(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

RrefResult rref(const Mat& m) {
  auto rows = rows_of(m);
  auto pivots = reduce_rows(rows, m.cols());
  return {Mat::from_rows(rows, m.cols()), std::move(pivots)};
}

size_t rank(const Mat& m) {
  if (m.rows() > m.cols()) return rref(m.transpose()).rank();
  return rref(m).rank();
}

Mat kernel_basis(const Mat& m) {
  auto rows = rows_of(m);
  const auto pivots = reduce_rows(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(basis, m.cols());
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: right-hand side length mismatch");
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  const auto pivots = reduce_rows(rows, a.cols() + 1);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][a.cols()];
  return x;
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: row mismatch");
  const size_t n = a.cols(), k = b.cols();
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    for (size_t j = 0; j < k; ++j) row.push_back(b(r, j));
    rows.push_back(std::move(row));
  }
  // Eliminate on the coefficient columns only, then check consistency.
  std::vector<size_t> pivots;
  {
    size_t lead = 0;
    Scalar f, tmp;
    for (size_t c = 0; c < n && lead < rows.size(); ++c) {
      size_t p = lead;
      while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[lead]);
      Vec& prow = rows[lead];
      const Scalar inv = 1 / prow[c];
      for (size_t j = c; j < n + k; ++j)
        if (sgn(prow[j]) != 0) prow[j] *= inv;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == lead || sgn(rows[r][c]) == 0) continue;
        f = rows[r][c];
        for (size_t j = c; j < n + k; ++j) {
          if (sgn(prow[j]) == 0) continue;
          tmp = f * prow[j];
          rows[r][j] -= tmp;
        }
      }
      pivots.push_back(c);
      ++lead;
    }
  }
  for (size_t r = pivots.size(); r < rows.size(); ++r)
    for (size_t j = n; j < n + k; ++j)
      if (sgn(rows[r][j]) != 0) return std::nullopt;
  Mat x(n, k);
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < k; ++j) x(pivots[i], j) = rows[i][n + j];
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_matrix(m, Mat::identity(m.rows()));
}

std::vector<size_t> independent_columns(const Mat& m) {
  auto rows = rows_of(m);
  return reduce_rows(rows, m.cols());
}

Mat column_space_basis(const Mat& m) {
  const auto idx = independent_columns(m);
  Mat b(m.rows(), idx.size());
  for (size_t j = 0; j < idx.size(); ++j)
    for (size_t r = 0; r < m.rows(); ++r) b(r, j) = m(r, idx[j]);
  return b;
}

QuotientMap quotient_by(const Mat& spanning, size_t ambient) {
  std::vector<Vec> rows;
  for (size_t c = 0; c < spanning.cols(); ++c) rows.push_back(spanning.column(c));
  const auto pivots = reduce_rows(rows, ambient);
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<size_t> free;
  for (size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free.push_back(c);
  QuotientMap q{Mat(free.size(), ambient), Mat(ambient, free.size())};
  for (size_t j = 0; j < free.size(); ++j) {
    q.projection(j, free[j]) = 1;
    q.section(free[j], j) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) q.projection(j, pivots[i]) = -rows[i][free[j]];
  }
  return q;
}

Mat intersect_spans(const Mat& a, const Mat& b) {
  // x in span(a) and span(b): a u = b v  <=>  [a | -b] (u; v) = 0.
  const Mat stacked = a.hstack(b.scaled(-1));
  const Mat ker = kernel_basis(stacked);
  Mat u(a.cols(), ker.cols());
  for (size_t c = 0; c < ker.cols(); ++c)
    for (size_t r = 0; r < a.cols(); ++r) u(r, c) = ker(r, c);
  return column_space_basis(a * u);
}

}  // namespace ncm::la
