#include "minors/constructions.hpp"

#include <set>

#include "algebra/structure.hpp"

namespace ncm::minors {

namespace {

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

Mat place(size_t n, size_t row0, size_t col0, const Mat& block) {
  Mat out(n, n);
  for (size_t r = 0; r < block.rows(); ++r)
    for (size_t c = 0; c < block.cols(); ++c) out(row0 + r, col0 + c) = block(r, c);
  return out;
}

Vec act_by(const std::vector<Mat>& ops, const Vec& coeffs, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < ops.size(); ++i)
    if (sgn(coeffs[i]) != 0) out = out + coeffs[i] * ops[i].apply(v);
  return out;
}

Vec concat(std::initializer_list<const Vec*> parts) {
  Vec out;
  for (const Vec* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Vec slice(const Vec& v, size_t from, size_t n) { return Vec(v.begin() + from, v.begin() + from + n); }

}  // namespace

EndoConstruction endomorphism_construction(const AlgebraPtr& a, const Representation& f) {
  alg::require_same_parent(a, f.parent);
  const size_t ad = a->dim(), fd = f.dim, n = ad + fd;
  const Representation reg = alg::regular_module(a);
  std::vector<Mat> basis;
  std::vector<std::string> labels = a->labels();
  for (size_t i = 0; i < ad; ++i) basis.push_back(place(n, 0, 0, a->right_mult(a->basis_vector(i))));
  for (size_t j = 0; j < fd; ++j) {
    Mat m(fd, ad);
    for (size_t c = 0; c < ad; ++c) m.set_column(c, f.action[c].column(j));
    basis.push_back(place(n, ad, 0, m));
    labels.push_back("f" + std::to_string(j + 1));
  }
  const std::vector<Mat> fprime = alg::hom_space(f, reg);
  for (size_t j = 0; j < fprime.size(); ++j) {
    basis.push_back(place(n, 0, ad, fprime[j]));
    labels.push_back("g" + std::to_string(j + 1));
  }
  const std::vector<Mat> ends = alg::hom_space(f, f);
  for (size_t j = 0; j < ends.size(); ++j) {
    basis.push_back(place(n, ad, ad, ends[j]));
    labels.push_back("h" + std::to_string(j + 1));
  }
  const size_t bd = basis.size();
  std::vector<Vec> flat;
  for (const Mat& m : basis) flat.push_back(flatten(m));
  const Mat fm = Mat::from_columns(flat, n * n);

  std::vector<Vec> prods;
  for (size_t i = 0; i < bd; ++i)
    for (size_t j = 0; j < bd; ++j) prods.push_back(flatten(basis[j] * basis[i]));
  auto coords = la::solve_matrix(fm, Mat::from_columns(prods, n * n));
  if (!coords) throw Error(ErrorKind::InvalidInput, "End(A + F) not closed on the block basis");
  alg::StructureTensor t(bd, std::vector<Vec>(bd));
  for (size_t i = 0; i < bd; ++i)
    for (size_t j = 0; j < bd; ++j) t[i][j] = coords->column(i * bd + j);
  auto unit = la::solve(fm, flatten(Mat::identity(n)));
  if (!unit) throw Error(ErrorKind::InvalidInput, "identity of A + F not in the block basis");

  EndoConstruction out;
  const std::string name = (a->name().empty() ? "A" : a->name()) + "_F";
  out.algebra = alg::Algebra::from_structure_constants(labels, t, *unit, name);
  out.f_dim = fd;
  out.fprime_dim = fprime.size();
  out.e_dim = ends.size();
  out.e = Vec(bd);
  for (size_t i = 0; i < ad; ++i) out.e[i] = a->unit()[i];
  out.complement = *unit - out.e;

  const MinorData md = minor(out.algebra, out.e);
  bool ok = md.a->dim() == ad && md.end_iso;
  if (ok) {
    Mat iso(ad, ad);
    for (size_t i = 0; i < ad; ++i) {
      auto c = la::solve(md.a_embed, out.algebra->basis_vector(i));
      if (!c) {
        ok = false;
        break;
      }
      iso.set_column(i, *c);
    }
    ok = ok && alg::is_algebra_isomorphism(*a, *md.a, iso);
  }
  out.recovers = ok;
  out.witness = ok ? "eA_Fe has dim " + std::to_string(ad) + " and b -> r_b is an algebra isomorphism"
                   : "minor at e does not recover A (dim " + std::to_string(md.a->dim()) + ")";
  return out;
}

GlueResult subhereditary_glue(const AlgebraPtr& a, const AlgebraPtr& h, const Mat& inclusion) {
  const size_t ad = a->dim(), hd = h->dim();
  if (inclusion.rows() != hd || inclusion.cols() != ad)
    throw Error(ErrorKind::NotMonomorphism, "inclusion has the wrong shape");
  if (auto v = alg::algebra_map_violation(*a, *h, inclusion)) throw Error(ErrorKind::NotMonomorphism, *v);
  if (la::rank(inclusion) != ad) throw Error(ErrorKind::NotMonomorphism, "inclusion is not injective");

  const la::QuotientMap off = la::quotient_by(inclusion, hd);
  Mat sys(0, ad);
  for (size_t j = 0; j < hd; ++j) sys = sys.vstack(off.projection * h->left_regular(j) * inclusion);
  const Mat cond = la::kernel_basis(sys);
  const alg::QuotientAlgebra q = alg::quotient_by_ideal(a, cond);
  if (alg::radical(q.algebra).cols() != 0)
    throw Error(ErrorKind::QuotientNotSemisimple,
                "A/I has nonzero radical (dim I = " + std::to_string(cond.cols()) + ")");

  const size_t id = cond.cols(), n = ad + hd + id + hd;
  const Mat ih = inclusion * cond;  // I inside H
  auto to_h = [&](const Vec& x, Vec& m11, Vec& m12, Vec& m21, Vec& m22) {
    m11 = inclusion.apply(slice(x, 0, ad));
    m12 = slice(x, ad, hd);
    m21 = id ? ih.apply(slice(x, ad + hd, id)) : Vec(hd);
    m22 = slice(x, ad + hd + id, hd);
  };
  auto from_h = [&](const Vec& m11, const Vec& m12, const Vec& m21, const Vec& m22) {
    auto c11 = la::solve(inclusion, m11);
    std::optional<Vec> c21 = id ? la::solve(ih, m21) : (la::is_zero(m21) ? std::optional<Vec>(Vec()) : std::nullopt);
    if (!c11 || !c21) throw Error(ErrorKind::InvalidInput, "glued product left [[A, H], [I, H]]");
    return concat({&*c11, &m12, &*c21, &m22});
  };
  alg::StructureTensor t(n, std::vector<Vec>(n));
  for (size_t i = 0; i < n; ++i) {
    Vec x11, x12, x21, x22;
    to_h(la::unit_vector(n, i), x11, x12, x21, x22);
    for (size_t j = 0; j < n; ++j) {
      Vec y11, y12, y21, y22;
      to_h(la::unit_vector(n, j), y11, y12, y21, y22);
      const Vec p11 = h->multiply(x11, y11) + h->multiply(x12, y21);
      const Vec p12 = h->multiply(x11, y12) + h->multiply(x12, y22);
      const Vec p21 = h->multiply(x21, y11) + h->multiply(x22, y21);
      const Vec p22 = h->multiply(x21, y12) + h->multiply(x22, y22);
      t[i][j] = from_h(p11, p12, p21, p22);
    }
  }
  std::vector<std::string> labels = a->labels();
  for (const auto& l : h->labels()) labels.push_back(l + "@12");
  for (size_t k = 0; k < id; ++k) labels.push_back("i" + std::to_string(k + 1) + "@21");
  for (const auto& l : h->labels()) labels.push_back(l + "@22");
  const Vec zh(hd), zi(id);
  const Vec unit = concat({&a->unit(), &zh, &zi, &h->unit()});

  GlueResult g;
  g.algebra = alg::Algebra::from_structure_constants(labels, t, unit,
                                                     (a->name().empty() ? "A" : a->name()) + "_H");
  g.conductor = cond;
  g.a_dim = ad;
  g.h_dim = hd;
  g.i_dim = id;
  const Vec za(ad);
  g.e = concat({&za, &zh, &zi, &h->unit()});
  return g;
}

AlgebraPtr triangular_algebra(const AlgebraPtr& q, const AlgebraPtr& l, const Bimodule& e, std::string name) {
  const size_t qd = q->dim(), ld = l->dim(), ed = e.dim, n = qd + ed + ld;
  if (e.left.size() != qd || e.right.size() != ld)
    throw Error(ErrorKind::NotAModule, "bimodule action count does not match the algebras");
  alg::validate_module(Representation{q, ed, e.left});
  Mat ru(ed, ed);
  for (size_t j = 0; j < ld; ++j)
    if (sgn(l->unit()[j]) != 0) ru = ru + e.right[j].scaled(l->unit()[j]);
  if (!ru.is_identity()) throw Error(ErrorKind::NotAModule, "unit of the right algebra does not act as identity");
  for (size_t i = 0; i < ld; ++i)
    for (size_t j = 0; j < ld; ++j) {
      const Vec p = l->multiply(l->basis_vector(i), l->basis_vector(j));
      Mat rp(ed, ed);
      for (size_t k = 0; k < ld; ++k)
        if (sgn(p[k]) != 0) rp = rp + e.right[k].scaled(p[k]);
      if (!(rp == e.right[j] * e.right[i]))
        throw Error(ErrorKind::NotAModule, "right action fails at (" + l->labels()[i] + ", " + l->labels()[j] + ")");
    }
  for (size_t i = 0; i < qd; ++i)
    for (size_t j = 0; j < ld; ++j)
      if (!(e.left[i] * e.right[j] == e.right[j] * e.left[i]))
        throw Error(ErrorKind::ActionsDoNotCommute,
                    "left " + q->labels()[i] + " and right " + l->labels()[j] + " do not commute");

  alg::StructureTensor t(n, std::vector<Vec>(n));
  for (size_t i = 0; i < n; ++i) {
    const Vec x = la::unit_vector(n, i);
    const Vec xq = slice(x, 0, qd), xe = slice(x, qd, ed), xl = slice(x, qd + ed, ld);
    for (size_t j = 0; j < n; ++j) {
      const Vec y = la::unit_vector(n, j);
      const Vec yq = slice(y, 0, qd), ye = slice(y, qd, ed), yl = slice(y, qd + ed, ld);
      const Vec pq = q->multiply(xq, yq);
      const Vec pe = act_by(e.left, xq, ye) + act_by(e.right, yl, xe);
      const Vec pl = l->multiply(xl, yl);
      t[i][j] = concat({&pq, &pe, &pl});
    }
  }
  std::set<std::string> ql(q->labels().begin(), q->labels().end());
  bool clash = false;
  for (const auto& s : l->labels()) clash = clash || ql.count(s);
  std::vector<std::string> labels;
  for (const auto& s : q->labels()) labels.push_back(clash ? "q_" + s : s);
  for (size_t k = 0; k < ed; ++k) labels.push_back("m" + std::to_string(k + 1));
  for (const auto& s : l->labels()) labels.push_back(clash ? "l_" + s : s);
  const Vec ze(ed);
  const Vec unit = concat({&q->unit(), &ze, &l->unit()});
  if (name.empty()) name = "T(" + q->name() + "," + l->name() + ")";
  return alg::Algebra::from_structure_constants(labels, t, unit, name);
}

}  // namespace ncm::minors
