#include "algebra/algebra.hpp"

#include <sstream>

namespace ncm::alg {

namespace {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) s.push_back({static_cast<uint32_t>(k), v[k]});
  return s;
}

void add_scaled(Vec& dst, const Scalar& f, const SparseVec& src) {
  Scalar tmp;
  for (const auto& t : src) {
    tmp = f * t.coeff;
    dst[t.index] += tmp;
  }
}

}  // namespace

AlgebraPtr Algebra::from_structure_constants(std::vector<std::string> labels, const StructureTensor& tensor, Vec unit,
                                             std::string name) {
  const size_t n = labels.size();
  if (tensor.size() != n || unit.size() != n)
    throw Error(ErrorKind::InvalidInput, "structure tensor / unit size does not match the basis size");
  std::vector<std::vector<SparseVec>> products(n, std::vector<SparseVec>(n));
  for (size_t i = 0; i < n; ++i) {
    if (tensor[i].size() != n) throw Error(ErrorKind::InvalidInput, "structure tensor is not n x n x n");
    for (size_t j = 0; j < n; ++j) {
      if (tensor[i][j].size() != n) throw Error(ErrorKind::InvalidInput, "structure tensor is not n x n x n");
      products[i][j] = to_sparse(tensor[i][j]);
    }
  }
  return from_products(std::move(labels), std::move(products), std::move(unit), std::move(name));
}

AlgebraPtr Algebra::from_products(std::vector<std::string> labels, std::vector<std::vector<SparseVec>> products,
                                  Vec unit, std::string name) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->name_ = std::move(name);
  a->labels_ = std::move(labels);
  a->products_ = std::move(products);
  a->unit_ = std::move(unit);
  const size_t n = a->labels_.size();
  if (a->products_.size() != n || a->unit_.size() != n)
    throw Error(ErrorKind::InvalidInput, "product table / unit size does not match the basis size");
  a->left_regular_.assign(n, Mat(n, n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& t : a->products_[i][j]) a->left_regular_[i](t.index, j) = t.coeff;
  a->validate();
  return a;
}

const std::vector<size_t>& Algebra::generators() const {
  std::call_once(generators_once_, [this] {
    const size_t n = dim();
    if (n == 0) return;
    Mat span = la::column_space_basis(Mat::from_columns({unit_}, n));
    for (size_t i = 0; i < n && span.cols() < n; ++i) {
      std::vector<Vec> cols = span.columns();
      cols.push_back(basis_vector(i));
      Mat grown = la::column_space_basis(Mat::from_columns(cols, n));
      if (grown.cols() == span.cols()) continue;
      generators_.push_back(i);
      // Close up under left multiplication by the generators.
      while (true) {
        std::vector<Vec> next = grown.columns();
        for (size_t g : generators_)
          for (const Vec& c : grown.columns()) next.push_back(left_regular_[g].apply(c));
        Mat closed = la::column_space_basis(Mat::from_columns(next, n));
        if (closed.cols() == grown.cols()) break;
        grown = std::move(closed);
      }
      span = std::move(grown);
    }
  });
  return generators_;
}

void Algebra::validate() const {
  const size_t n = dim();
  for (size_t i = 0; i < n; ++i) {
    const Vec bi = basis_vector(i);
    if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
      throw Error(ErrorKind::UnitViolation, "unit fails on basis element " + std::to_string(i) + " (" + labels_[i] + ")");
  }
  Vec lhs(n), rhs(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const SparseVec& ij = products_[i][j];
      for (size_t l = 0; l < n; ++l) {
        for (auto& x : lhs) x = 0;
        for (auto& x : rhs) x = 0;
        for (const auto& t : ij) add_scaled(lhs, t.coeff, products_[t.index][l]);
        for (const auto& t : products_[j][l]) add_scaled(rhs, t.coeff, products_[i][t.index]);
        if (lhs != rhs)
          throw Error(ErrorKind::AssociativityViolation,
                      "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(l) +
                          " != b" + std::to_string(i) + " (b" + std::to_string(j) + " b" + std::to_string(l) +
                          ") at indices (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(l) + ")");
      }
    }
}

Scalar Algebra::constant(size_t i, size_t j, size_t k) const {
  for (const auto& t : products_[i][j])
    if (t.index == k) return t.coeff;
  return 0;
}

StructureTensor Algebra::tensor() const {
  const size_t n = dim();
  StructureTensor t(n, std::vector<Vec>(n, Vec(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& term : products_[i][j]) t[i][j][term.index] = term.coeff;
  return t;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  const size_t n = dim();
  Vec out(n);
  Scalar f;
  for (size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      f = a[i] * b[j];
      add_scaled(out, f, products_[i][j]);
    }
  }
  return out;
}

Mat Algebra::left_mult(const Vec& a) const {
  const size_t n = dim();
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    m = m + left_regular_[i].scaled(a[i]);
  }
  return m;
}

Mat Algebra::right_mult(const Vec& a) const {
  const size_t n = dim();
  Mat m(n, n);
  Scalar f;
  for (size_t j = 0; j < n; ++j)  // column j: b_j * a
    for (size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (const auto& t : products_[j][i]) {
        f = a[i] * t.coeff;
        m(t.index, j) += f;
      }
    }
  return m;
}

bool Algebra::same_structure(const Algebra& o) const {
  if (dim() != o.dim() || unit_ != o.unit_) return false;
  for (size_t i = 0; i < dim(); ++i)
    if (!(left_regular_[i] == o.left_regular_[i])) return false;
  return true;
}

std::string Algebra::format_element(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Scalar c = v[i];
    if (first) {
      if (sgn(c) < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) os << c.get_str() << '*';
    os << labels_[i];
    first = false;
  }
  return first ? "0" : os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.parent != b.parent && !(a.parent && b.parent && a.parent->same_structure(*b.parent)))
    throw Error(ErrorKind::ParentMismatch, "elements belong to different algebras");
  return {a.parent, a.parent->multiply(a.coords, b.coords)};
}

AlgebraElement unit_element(const AlgebraPtr& a) { return {a, a->unit()}; }

bool is_idempotent(const Algebra& a, const Vec& e) { return a.multiply(e, e) == e; }

AlgebraPtr opposite(const AlgebraPtr& a) {
  const size_t n = a->dim();
  std::vector<std::vector<SparseVec>> products(n, std::vector<SparseVec>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) products[i][j] = a->product(j, i);
  return Algebra::from_products(a->labels(), std::move(products), a->unit(), a->name() + "^op");
}

AlgebraPtr zero_algebra(std::string name) { return Algebra::from_products({}, {}, {}, std::move(name)); }

AlgebraPtr field_algebra(std::string label) {
  return Algebra::from_products({std::move(label)}, {{SparseVec{{0, 1}}}}, Vec{1}, "k");
}

AlgebraPtr matrix_algebra(size_t n) {
  const size_t d = n * n;
  std::vector<std::string> labels;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)  // E_ab E_bc = E_ac
        for (size_t e = 0; e < n; ++e) {
          if (b != c) continue;
          products[a * n + b][c * n + e].push_back({static_cast<uint32_t>(a * n + e), 1});
        }
  Vec unit(d);
  for (size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return Algebra::from_products(std::move(labels), std::move(products), std::move(unit),
                                "Mat(" + std::to_string(n) + ")");
}

AlgebraPtr diagonal_algebra(size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> products(n, std::vector<SparseVec>(n));
  for (size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    products[i][i].push_back({static_cast<uint32_t>(i), 1});
  }
  return Algebra::from_products(std::move(labels), std::move(products), Vec(n, Scalar(1)),
                                "k^" + std::to_string(n));
}

std::optional<std::string> algebra_map_violation(const Algebra& src, const Algebra& tgt, const Mat& map) {
  if (map.rows() != tgt.dim() || map.cols() != src.dim()) return "map has the wrong shape";
  if (map.apply(src.unit()) != tgt.unit()) return "unit is not preserved";
  for (size_t i = 0; i < src.dim(); ++i) {
    const Vec fi = map.column(i);
    for (size_t j = 0; j < src.dim(); ++j) {
      const Vec lhs = map.apply(src.multiply(src.basis_vector(i), src.basis_vector(j)));
      const Vec rhs = tgt.multiply(fi, map.column(j));
      if (lhs != rhs) return "product of " + src.labels()[i] + " and " + src.labels()[j] + " is not preserved";
    }
  }
  return std::nullopt;
}

bool is_algebra_isomorphism(const Algebra& src, const Algebra& tgt, const Mat& map) {
  if (src.dim() != tgt.dim()) return false;
  if (la::rank(map) != src.dim()) return false;
  return !algebra_map_violation(src, tgt, map).has_value();
}

QuotientAlgebra quotient_by_ideal(const AlgebraPtr& a, const Mat& ideal, std::string name) {
  la::QuotientMap q = la::quotient_by(ideal, a->dim());
  const size_t m = q.dim();
  std::vector<std::string> labels;
  std::vector<Vec> lifts;
  for (size_t j = 0; j < m; ++j) {
    lifts.push_back(q.section.column(j));
    size_t idx = 0;
    for (size_t r = 0; r < a->dim(); ++r)
      if (sgn(q.section(r, j)) != 0) idx = r;
    labels.push_back(a->labels()[idx]);
  }
  std::vector<std::vector<SparseVec>> products(m, std::vector<SparseVec>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) products[i][j] = to_sparse(q.projection.apply(a->multiply(lifts[i], lifts[j])));
  Vec unit = q.projection.apply(a->unit());
  auto alg = Algebra::from_products(std::move(labels), std::move(products), std::move(unit), std::move(name));
  return {alg, std::move(q)};
}

AlgebraPtr subalgebra_on_basis(const AlgebraPtr& a, const Mat& basis, const Vec& unit_in_a,
                               std::vector<std::string> labels, std::string name) {
  const size_t d = basis.cols();
  std::vector<Vec> prods;
  prods.reserve(d * d + 1);
  const auto cols = basis.columns();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) prods.push_back(a->multiply(cols[i], cols[j]));
  prods.push_back(unit_in_a);
  auto coords = la::solve_matrix(basis, Mat::from_columns(prods, a->dim()));
  if (!coords) throw Error(ErrorKind::InvalidInput, "subspace is not closed under multiplication");
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) products[i][j] = to_sparse(coords->column(i * d + j));
  return Algebra::from_products(std::move(labels), std::move(products), coords->column(d * d), std::move(name));
}

}  // namespace ncm::alg
