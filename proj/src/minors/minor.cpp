#include "minors/minor.hpp"

#include <set>
#include <sstream>

namespace ncm::minors {

namespace {

Vec coords_in(const Mat& basis, const Vec& v, const char* what) {
  auto c = la::solve(basis, v);
  if (!c) throw Error(ErrorKind::InvalidInput, std::string("vector left the subspace ") + what);
  return *c;
}

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

// Kronecker product of an (r x r) matrix with an (n' x n) matrix.
Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return out;
}

// Matrix of x -> x*y on the subspace spanned by `basis`.
Mat right_action_on(const alg::Algebra& b, const Mat& basis, const Vec& y, const char* what) {
  Mat out(basis.cols(), basis.cols());
  for (size_t j = 0; j < basis.cols(); ++j) out.set_column(j, coords_in(basis, b.multiply(basis.column(j), y), what));
  return out;
}

Mat left_action_on(const alg::Algebra& b, const Mat& basis, const Vec& y, const char* what) {
  Mat out(basis.cols(), basis.cols());
  for (size_t j = 0; j < basis.cols(); ++j) out.set_column(j, coords_in(basis, b.multiply(y, basis.column(j)), what));
  return out;
}

}  // namespace

MinorData minor(const AlgebraPtr& b, const Vec& e, std::string name) {
  if (e.size() != b->dim()) throw Error(ErrorKind::ParentMismatch, "idempotent has the wrong length");
  if (la::is_zero(e)) throw Error(ErrorKind::ZeroIdempotent, "e = 0");
  if (!alg::is_idempotent(*b, e)) throw Error(ErrorKind::NotIdempotent, "e*e != e for e = " + b->format_element(e));
  MinorData md;
  md.b = b;
  md.e = e;
  if (name.empty()) name = b->name().empty() ? "eBe" : "e(" + b->name() + ")e";
  alg::Corner c = alg::corner_algebra(b, e, name);
  md.a = c.algebra;
  md.a_embed = c.embedding;
  md.p_basis = la::column_space_basis(b->right_mult(e));
  md.pvee_basis = la::column_space_basis(b->left_mult(e));
  md.p_dim = md.p_basis.cols();

  // A -> End_B(Be)^op
  const Representation p = alg::submodule(alg::regular_module(b), md.p_basis);
  const size_t end_dim = alg::hom_space(p, p).size();
  std::vector<Mat> r;
  std::vector<Vec> flat;
  for (size_t k = 0; k < md.a->dim(); ++k) {
    r.push_back(right_action_on(*b, md.p_basis, md.a_embed.column(k), "Be"));
    flat.push_back(flatten(r.back()));
  }
  std::ostringstream w;
  bool ok = end_dim == md.a->dim();
  if (!ok) w << "dim End_B(Be) = " << end_dim << " but dim eBe = " << md.a->dim();
  if (ok && !flat.empty() && la::rank(Mat::from_columns(flat, flat[0].size())) != flat.size()) {
    ok = false;
    w << "canonical map is not injective";
  }
  for (size_t k = 0; ok && k < r.size(); ++k)
    if (!alg::is_homomorphism(p, p, r[k])) {
      ok = false;
      w << "right multiplication by " << md.a->labels()[k] << " is not B-linear";
    }
  for (size_t i = 0; ok && i < r.size(); ++i)
    for (size_t j = 0; ok && j < r.size(); ++j) {
      Mat rij(md.p_dim, md.p_dim);
      const Vec prod = md.a->multiply(md.a->basis_vector(i), md.a->basis_vector(j));
      for (size_t k = 0; k < r.size(); ++k)
        if (sgn(prod[k]) != 0) rij = rij + r[k].scaled(prod[k]);
      if (!(rij == r[j] * r[i])) {
        ok = false;
        w << "canonical map not multiplicative at (" << md.a->labels()[i] << ", " << md.a->labels()[j] << ")";
      }
    }
  md.end_iso = ok;
  md.end_witness = ok ? "dim End_B(Be)^op = " + std::to_string(end_dim) + ", canonical map bijective and multiplicative"
                      : w.str();
  return md;
}

Vec idempotent_from_labels(const alg::BasicAlgebra& b, const std::string& spec) {
  Vec e(b.algebra->dim());
  std::stringstream ss(spec);
  std::string part;
  size_t count = 0;
  std::set<size_t> seen;
  while (std::getline(ss, part, '+')) {
    const auto first = part.find_first_not_of(" \t");
    const auto last = part.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorKind::InvalidInput, "empty term in idempotent '" + spec + "'");
    const std::string label = part.substr(first, last - first + 1);
    auto idx = b.index_of(label);
    if (!idx) throw Error(ErrorKind::InvalidInput, "unknown idempotent label '" + label + "'");
    if (seen.count(*idx))
      throw Error(ErrorKind::NotIdempotent, "label '" + label + "' repeated in '" + spec + "'");
    seen.insert(*idx);
    e = e + b.idempotents.elements[*idx];
    ++count;
  }
  if (count == 0) throw Error(ErrorKind::InvalidInput, "empty idempotent specification");
  return e;
}

GImage functor_G(const MinorData& md, const Representation& m) {
  alg::require_same_parent(md.b, m.parent);
  GImage g;
  g.basis = la::column_space_basis(m.act(md.e));
  g.module = Representation{md.a, g.basis.cols(), {}};
  for (size_t k = 0; k < md.a->dim(); ++k) {
    if (g.basis.cols() == 0) {
      g.module.action.emplace_back(0, 0);
      continue;
    }
    auto x = la::solve_matrix(g.basis, m.act(md.a_embed.column(k)) * g.basis);
    if (!x) throw Error(ErrorKind::InvalidInput, "eM is not stable under eBe");
    g.module.action.push_back(*x);
  }
  return g;
}

FImage functor_F(const MinorData& md, const Representation& n) {
  alg::require_same_parent(md.a, n.parent);
  const size_t r = md.p_dim, nd = n.dim, total = r * nd;
  FImage f;
  f.n_dim = nd;
  std::vector<Vec> rel;
  for (size_t k = 0; k < md.a->dim(); ++k) {
    const Mat rk = right_action_on(*md.b, md.p_basis, md.a_embed.column(k), "Be");
    for (size_t i = 0; i < r; ++i)
      for (size_t v = 0; v < nd; ++v) {
        Vec x(total);
        for (size_t i2 = 0; i2 < r; ++i2) x[i2 * nd + v] += rk(i2, i);
        for (size_t v2 = 0; v2 < nd; ++v2) x[i * nd + v2] -= n.action[k](v2, v);
        if (!la::is_zero(x)) rel.push_back(std::move(x));
      }
  }
  f.quotient = la::quotient_by(rel.empty() ? Mat(total, 0) : Mat::from_columns(rel, total), total);
  f.module = Representation{md.b, f.quotient.dim(), {}};
  const Mat id = Mat::identity(nd);
  for (size_t j = 0; j < md.b->dim(); ++j) {
    const Mat lj = left_action_on(*md.b, md.p_basis, md.b->basis_vector(j), "Be");
    f.module.action.push_back(f.quotient.projection * kron(lj, id) * f.quotient.section);
  }
  return f;
}

Mat functor_F_map(const MinorData& md, const FImage& src, const FImage& tgt, const Mat& f) {
  return tgt.quotient.projection * kron(Mat::identity(md.p_dim), f) * src.quotient.section;
}

Representation pvee_module(const MinorData& md) {
  Representation m{md.a, md.pvee_basis.cols(), {}};
  for (size_t k = 0; k < md.a->dim(); ++k)
    m.action.push_back(left_action_on(*md.b, md.pvee_basis, md.a_embed.column(k), "eB"));
  return m;
}

namespace {

Mat coords_of_maps(const std::vector<Mat>& basis, const std::vector<Mat>& maps, size_t rows, size_t cols) {
  if (basis.empty()) return Mat(0, maps.size());
  std::vector<Vec> bf, mf;
  for (const Mat& m : basis) bf.push_back(flatten(m));
  for (const Mat& m : maps) mf.push_back(flatten(m));
  const size_t len = rows * cols;
  auto x = la::solve_matrix(Mat::from_columns(bf, len), Mat::from_columns(mf, len));
  if (!x) throw Error(ErrorKind::InvalidInput, "map is not in the span of the Hom basis");
  return *x;
}

}  // namespace

HImage functor_H(const MinorData& md, const Representation& n) {
  alg::require_same_parent(md.a, n.parent);
  HImage h;
  const Representation q = pvee_module(md);
  h.maps = alg::hom_space(q, n);
  h.module = Representation{md.b, h.maps.size(), {}};
  for (size_t l = 0; l < md.b->dim(); ++l) {
    const Mat rb = right_action_on(*md.b, md.pvee_basis, md.b->basis_vector(l), "eB");
    std::vector<Mat> moved;
    for (const Mat& f : h.maps) moved.push_back(f * rb);
    h.module.action.push_back(coords_of_maps(h.maps, moved, n.dim, q.dim));
  }
  return h;
}

Mat functor_H_map(const MinorData& md, const HImage& src, const HImage& tgt, const Mat& f) {
  std::vector<Mat> moved;
  for (const Mat& g : src.maps) moved.push_back(f * g);
  return coords_of_maps(tgt.maps, moved, f.rows(), md.pvee_basis.cols());
}

Mat unit_map(const MinorData& md, const FImage& f, const GImage& gf) {
  const Vec ec = coords_in(md.p_basis, md.e, "Be");
  Mat out(gf.basis.cols(), f.n_dim);
  for (size_t v = 0; v < f.n_dim; ++v) {
    Vec x(md.p_dim * f.n_dim);
    for (size_t i = 0; i < md.p_dim; ++i) x[i * f.n_dim + v] = ec[i];
    const Vec fx = f.quotient.projection.apply(x);
    if (gf.basis.cols() == 0) {
      if (!la::is_zero(fx)) throw Error(ErrorKind::InvalidInput, "e(x)v outside eF(N)");
      continue;
    }
    out.set_column(v, coords_in(gf.basis, fx, "eF(N)"));
  }
  return out;
}

Mat counit_map(const MinorData& md, const HImage& h, const GImage& gh) {
  const Vec ec = coords_in(md.pvee_basis, md.e, "eB");
  const size_t nd = h.maps.empty() ? 0 : h.maps[0].rows();
  Mat out(nd, gh.basis.cols());
  for (size_t c = 0; c < gh.basis.cols(); ++c) {
    Vec val(nd);
    for (size_t j = 0; j < h.maps.size(); ++j)
      if (sgn(gh.basis(j, c)) != 0) val = val + gh.basis(j, c) * h.maps[j].apply(ec);
    out.set_column(c, val);
  }
  return out;
}

Mat trace_ideal(const MinorData& md) {
  return alg::ideal_generated(*md.b, Mat::from_columns({md.e}, md.b->dim()));
}

alg::QuotientAlgebra quotient_algebra(const AlgebraPtr& b, const Mat& ideal, std::string name) {
  if (!alg::is_two_sided_ideal(*b, ideal)) throw Error(ErrorKind::NotAnIdeal, "span is not a two-sided ideal");
  return alg::quotient_by_ideal(b, ideal, std::move(name));
}

Representation right_module_as_left(const AlgebraPtr& b, const Mat& subspace, const AlgebraPtr& sub_op,
                                    const Mat& embed) {
  Representation m{sub_op, subspace.cols(), {}};
  for (size_t k = 0; k < sub_op->dim(); ++k) m.action.push_back(right_action_on(*b, subspace, embed.column(k), "X"));
  return m;
}

}  // namespace ncm::minors
