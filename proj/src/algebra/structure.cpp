#include "algebra/structure.hpp"

#include <algorithm>

namespace ncm::alg {

namespace {

// Gram matrix of the trace form (x, y) -> tr(L_{xy}).
Mat trace_form(const Algebra& a) {
  const size_t n = a.dim();
  Vec tr(n);
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) tr[k] += a.left_regular(k)(i, i);
  Mat t(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& term : a.product(i, j)) t(i, j) += term.coeff * tr[term.index];
  return t;
}

bool in_span(const Mat& span, const Vec& v) {
  if (la::is_zero(v)) return true;
  if (span.cols() == 0) return false;
  return la::solve(span, v).has_value();
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar evaluate(const std::vector<mpz_class>& c, const Scalar& x) {
  Scalar acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + Scalar(c[i]);
  return acc;
}

}  // namespace

Mat radical(const AlgebraPtr& self) {
  const Algebra& a = *self;
  Mat r(a.dim(), 0);
  while (true) {
    QuotientAlgebra q = quotient_by_ideal(self, r);
    if (q.algebra->dim() == 0) break;
    const Mat k = la::kernel_basis(trace_form(*q.algebra));
    if (k.cols() == 0) break;
    r = la::column_space_basis(r.hstack(q.map.section * k));
  }
  return r;
}

Mat product_span(const Algebra& a, const Mat& u, const Mat& v) {
  std::vector<Vec> prods;
  for (size_t i = 0; i < u.cols(); ++i) {
    const Vec x = u.column(i);
    for (size_t j = 0; j < v.cols(); ++j) prods.push_back(a.multiply(x, v.column(j)));
  }
  return la::column_space_basis(Mat::from_columns(prods, a.dim()));
}

Mat ideal_generated(const Algebra& a, const Mat& gens) {
  const Mat full = Mat::identity(a.dim());
  const Mat left = product_span(a, full, gens);
  return product_span(a, left, full);
}

bool is_two_sided_ideal(const Algebra& a, const Mat& span) {
  for (size_t c = 0; c < span.cols(); ++c) {
    const Vec x = span.column(c);
    for (size_t i = 0; i < a.dim(); ++i) {
      const Vec b = a.basis_vector(i);
      if (!in_span(span, a.multiply(b, x)) || !in_span(span, a.multiply(x, b))) return false;
    }
  }
  return true;
}

size_t nilpotency_index(const Algebra& a, const Mat& ideal) {
  if (a.dim() == 0) return 0;
  Mat p = la::column_space_basis(ideal);
  size_t k = 1;
  while (p.cols() > 0) {
    p = product_span(a, p, ideal);
    ++k;
    if (k > a.dim() + 1) throw Error(ErrorKind::InvalidInput, "ideal is not nilpotent");
  }
  return k;
}

Corner corner_algebra(const AlgebraPtr& a, const Vec& e, std::string name) {
  std::vector<Vec> spans;
  for (size_t i = 0; i < a->dim(); ++i) spans.push_back(a->multiply(a->multiply(e, a->basis_vector(i)), e));
  const Mat all = Mat::from_columns(spans, a->dim());
  const std::vector<size_t> idx = la::independent_columns(all);
  Mat emb(a->dim(), idx.size());
  std::vector<std::string> labels;
  for (size_t j = 0; j < idx.size(); ++j) {
    emb.set_column(j, spans[idx[j]]);
    const std::string& l = a->labels()[idx[j]];
    labels.push_back(spans[idx[j]] == a->basis_vector(idx[j]) ? l : "(" + l + ")e");
  }
  return {subalgebra_on_basis(a, emb, e, std::move(labels), std::move(name)), emb};
}

Mat center(const Algebra& a) {
  const size_t n = a.dim();
  Mat sys(n * n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      for (const auto& t : a.product(k, i)) sys(i * n + t.index, k) += t.coeff;
      for (const auto& t : a.product(i, k)) sys(i * n + t.index, k) -= t.coeff;
    }
  return la::kernel_basis(sys);
}

bool is_commutative(const Algebra& a) {
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = i + 1; j < a.dim(); ++j) {
      const SparseVec& x = a.product(i, j);
      const SparseVec& y = a.product(j, i);
      Vec dx(a.dim()), dy(a.dim());
      for (const auto& t : x) dx[t.index] = t.coeff;
      for (const auto& t : y) dy[t.index] = t.coeff;
      if (dx != dy) return false;
    }
  return true;
}

Vec minimal_polynomial(const Algebra& a, const Vec& x, const Vec& one) {
  std::vector<Vec> powers{one};
  while (true) {
    const Vec next = a.multiply(powers.back(), x);
    const Mat span = Mat::from_columns(powers, a.dim());
    if (auto s = la::solve(span, next)) {
      Vec poly(powers.size() + 1);
      for (size_t i = 0; i < powers.size(); ++i) poly[i] = -(*s)[i];
      poly.back() = 1;
      return poly;
    }
    powers.push_back(next);
  }
}

std::vector<Scalar> rational_roots(const Vec& coeffs) {
  Vec c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  std::vector<Scalar> roots;
  if (c.size() <= 1) return roots;
  size_t shift = 0;
  while (shift < c.size() && sgn(c[shift]) == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  c.erase(c.begin(), c.begin() + shift);
  if (c.size() <= 1) return roots;
  mpz_class den = 1;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& v : c) ic.push_back(mpz_class(v * Scalar(den)));
  for (const auto& p : divisors(ic.front()))
    for (const auto& q : divisors(ic.back()))
      for (int s : {1, -1}) {
        Scalar r(s * p, q);
        r.canonicalize();
        if (sgn(evaluate(ic, r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Idempotents primitive_idempotents(const AlgebraPtr& a) {
  const Mat rad = radical(a);
  QuotientAlgebra q = quotient_by_ideal(a, rad);
  const Algebra& top = *q.algebra;
  if (!is_commutative(top)) throw Error(ErrorKind::NonBasicTop, "semisimple quotient is not commutative");

  std::vector<Vec> done, todo;
  if (top.dim() > 0) todo.push_back(top.unit());
  while (!todo.empty()) {
    const Vec f = todo.back();
    todo.pop_back();
    std::vector<Vec> corner;
    for (size_t j = 0; j < top.dim(); ++j) corner.push_back(top.multiply(f, top.basis_vector(j)));
    if (la::rank(Mat::from_columns(corner, top.dim())) == 1) {
      done.push_back(f);
      continue;
    }
    bool split = false;
    for (const Vec& x : corner) {
      const Vec mp = minimal_polynomial(top, x, f);
      const size_t deg = mp.size() - 1;
      if (deg < 2) continue;
      const std::vector<Scalar> roots = rational_roots(mp);
      if (roots.size() < deg) throw Error(ErrorKind::NonBasicTop, "semisimple quotient is not split");
      for (const Scalar& r : roots) {
        Vec e = f;
        for (const Scalar& s : roots) {
          if (s == r) continue;
          Vec factor = x - s * f;
          Scalar inv = 1 / (r - s);
          e = inv * top.multiply(e, factor);
        }
        todo.push_back(e);
      }
      split = true;
      break;
    }
    if (!split) throw Error(ErrorKind::NonBasicTop, "semisimple quotient is not a product of fields");
  }

  std::vector<Vec> lifts;
  for (const Vec& f : done) lifts.push_back(q.map.section.apply(f));
  std::sort(lifts.begin(), lifts.end(), [](const Vec& x, const Vec& y) {
    auto first = [](const Vec& v) {
      for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
      return v.size();
    };
    const size_t fx = first(x), fy = first(y);
    if (fx != fy) return fx < fy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });

  Idempotents out;
  Vec rest = a->unit();
  for (size_t i = 0; i < lifts.size(); ++i) {
    Vec e;
    if (i + 1 == lifts.size()) {
      e = rest;
    } else {
      e = a->multiply(a->multiply(rest, lifts[i]), rest);
      for (size_t it = 0; it < 2 * a->dim() + 4 && !is_idempotent(*a, e); ++it) {
        const Vec e2 = a->multiply(e, e);
        const Vec e3 = a->multiply(e2, e);
        e = Scalar(3) * e2 - Scalar(2) * e3;
      }
      if (!is_idempotent(*a, e)) throw Error(ErrorKind::NonBasicTop, "idempotent lifting did not converge");
      rest = rest - e;
    }
    out.elements.push_back(e);
  }
  for (size_t i = 0; i < out.elements.size(); ++i) {
    std::string label = "e" + std::to_string(i + 1);
    for (size_t k = 0; k < a->dim(); ++k)
      if (out.elements[i] == a->basis_vector(k)) label = a->labels()[k];
    out.labels.push_back(label);
  }
  return out;
}

bool has_split_basic_top(const AlgebraPtr& a) {
  try {
    primitive_idempotents(a);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonBasicTop) return false;
    throw;
  }
}

}  // namespace ncm::alg
