#include "algebra/module.hpp"

#include <map>

#include "exactla/sparse.hpp"

#include <random>

namespace ncm::alg {

Mat Representation::act(const Vec& a) const {
  Mat out(dim, dim);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) out(r, c) += a[i] * action[i](r, c);
  }
  return out;
}

std::optional<std::string> module_violation(const Representation& m) {
  const Algebra& a = *m.parent;
  if (m.action.size() != a.dim()) return "action count does not match the algebra dimension";
  for (const Mat& x : m.action)
    if (x.rows() != m.dim || x.cols() != m.dim) return "action matrix has the wrong shape";
  if (!m.act(a.unit()).is_identity() && m.dim > 0) return "unit does not act as the identity";
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Mat rhs(m.dim, m.dim);
      for (const auto& t : a.product(i, j)) rhs = rhs + m.action[t.index].scaled(t.coeff);
      if (!(m.action[i] * m.action[j] == rhs))
        return "action of " + a.labels()[i] + "*" + a.labels()[j] + " is not the product of actions";
    }
  return std::nullopt;
}

void validate_module(const Representation& m) {
  if (auto v = module_violation(m)) throw Error(ErrorKind::NotAModule, *v);
}

bool same_parent(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

void require_same_parent(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!same_parent(a, b)) throw Error(ErrorKind::ParentMismatch, "modules live over different algebras");
}

Representation zero_module(const AlgebraPtr& a) { return {a, 0, std::vector<Mat>(a->dim(), Mat(0, 0))}; }

Representation regular_module(const AlgebraPtr& a) {
  Representation m{a, a->dim(), {}};
  for (size_t i = 0; i < a->dim(); ++i) m.action.push_back(a->left_regular(i));
  return m;
}

Representation direct_sum(const Representation& m, const Representation& n) {
  require_same_parent(m.parent, n.parent);
  Representation s{m.parent, m.dim + n.dim, {}};
  for (size_t i = 0; i < m.action.size(); ++i) {
    Mat x(s.dim, s.dim);
    for (size_t r = 0; r < m.dim; ++r)
      for (size_t c = 0; c < m.dim; ++c) x(r, c) = m.action[i](r, c);
    for (size_t r = 0; r < n.dim; ++r)
      for (size_t c = 0; c < n.dim; ++c) x(m.dim + r, m.dim + c) = n.action[i](r, c);
    s.action.push_back(std::move(x));
  }
  return s;
}

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
  Representation s = zero_module(a);
  for (const auto& p : parts) s = direct_sum(s, p);
  return s;
}

Representation submodule(const Representation& m, const Mat& basis) {
  Representation s{m.parent, basis.cols(), {}};
  for (const Mat& x : m.action) {
    if (basis.cols() == 0) {
      s.action.push_back(Mat(0, 0));
      continue;
    }
    auto sol = la::solve_matrix(basis, x * basis);
    if (!sol) throw Error(ErrorKind::NotAModule, "subspace is not invariant under the action");
    s.action.push_back(std::move(*sol));
  }
  return s;
}

QuotientModule quotient_module(const Representation& m, const Mat& span) {
  la::QuotientMap q = la::quotient_by(span, m.dim);
  Representation out{m.parent, q.dim(), {}};
  for (const Mat& x : m.action) out.action.push_back(q.projection * x * q.section);
  return {std::move(out), std::move(q)};
}

Mat generated_submodule(const Representation& m, const Mat& gens) {
  std::vector<Vec> cols;
  for (size_t j = 0; j < gens.cols(); ++j) {
    const Vec g = gens.column(j);
    for (const Mat& x : m.action) cols.push_back(x.apply(g));
  }
  return la::column_space_basis(Mat::from_columns(cols, m.dim));
}

Mat radical_submodule(const Representation& m, const Mat& rad) {
  std::vector<Vec> cols;
  for (size_t j = 0; j < rad.cols(); ++j) {
    const Mat x = m.act(rad.column(j));
    for (size_t c = 0; c < m.dim; ++c) cols.push_back(x.column(c));
  }
  return la::column_space_basis(Mat::from_columns(cols, m.dim));
}

std::vector<Mat> hom_space(const Representation& m, const Representation& n) {
  require_same_parent(m.parent, n.parent);
  const size_t rows = n.dim, cols = m.dim, unknowns = rows * cols;
  std::vector<Mat> basis;
  if (unknowns == 0) return basis;
  auto reshape = [&](const Vec& v) {
    Mat x(rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) x(r, c) = v[r * cols + c];
    return x;
  };
  // X m_b = n_b X for each generator b; unknown (r, c) is X(r, c).
  la::SparseEchelon eqs(unknowns);
  std::map<size_t, Scalar> acc;
  for (size_t b : m.parent->generators()) {
    const Mat& mb = m.action[b];
    const Mat& nb = n.action[b];
    for (size_t r = 0; r < rows && eqs.rank() < unknowns; ++r)
      for (size_t c = 0; c < cols; ++c) {
        acc.clear();
        for (size_t j = 0; j < cols; ++j)
          if (sgn(mb(j, c)) != 0) acc[r * cols + j] += mb(j, c);
        for (size_t i = 0; i < rows; ++i)
          if (sgn(nb(r, i)) != 0) acc[i * cols + c] -= nb(r, i);
        la::SparseRow eq;
        for (auto& [idx, v] : acc)
          if (sgn(v) != 0) eq.emplace_back(idx, std::move(v));
        if (!eq.empty()) eqs.add(std::move(eq));
      }
  }
  const Mat k = eqs.kernel_basis();
  for (size_t j = 0; j < k.cols(); ++j) basis.push_back(reshape(k.column(j)));
  return basis;
}

bool is_homomorphism(const Representation& m, const Representation& n, const Mat& f) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (size_t b : m.parent->generators())
    if (!(f * m.action[b] == n.action[b] * f)) return false;
  return true;
}

std::optional<Mat> find_isomorphism(const Representation& m, const Representation& n) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Mat(0, 0);
  const std::vector<Mat> h = hom_space(m, n);
  if (h.empty()) return std::nullopt;
  for (const Mat& f : h)
    if (la::rank(f) == m.dim) return f;
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 24; ++trial) {
    Mat f(n.dim, m.dim);
    for (const Mat& g : h) f = f + g.scaled(coeff(rng));
    if (la::rank(f) == m.dim) return f;
  }
  return std::nullopt;
}

Representation dual_module(const Representation& m, const AlgebraPtr& op) {
  Representation d{op, m.dim, {}};
  for (const Mat& x : m.action) d.action.push_back(x.transpose());
  return d;
}

Representation dual_of_right_ideal(const AlgebraPtr& a, const Mat& right_ideal) {
  const size_t d = right_ideal.cols();
  Representation out{a, d, {}};
  for (size_t k = 0; k < a->dim(); ++k) {
    if (d == 0) {
      out.action.push_back(Mat(0, 0));
      continue;
    }
    std::vector<Vec> imgs;
    for (size_t j = 0; j < d; ++j) imgs.push_back(a->multiply(right_ideal.column(j), a->basis_vector(k)));
    auto r = la::solve_matrix(right_ideal, Mat::from_columns(imgs, a->dim()));
    if (!r) throw Error(ErrorKind::NotAModule, "subspace is not a right ideal");
    out.action.push_back(r->transpose());
  }
  return out;
}

Representation inflate(const Representation& m, const AlgebraPtr& big, const Mat& projection) {
  Representation out{big, m.dim, {}};
  for (size_t i = 0; i < big->dim(); ++i) out.action.push_back(m.act(projection.column(i)));
  return out;
}

Representation restrict_module(const Representation& m, const AlgebraPtr& src, const Mat& phi) {
  Representation out{src, m.dim, {}};
  for (size_t i = 0; i < src->dim(); ++i) out.action.push_back(m.act(phi.column(i)));
  return out;
}

bool annihilated_by(const Representation& m, const Mat& span) {
  for (size_t j = 0; j < span.cols(); ++j)
    if (!m.act(span.column(j)).is_zero()) return false;
  return true;
}

}  // namespace ncm::alg
