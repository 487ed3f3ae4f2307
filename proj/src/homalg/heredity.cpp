#include "homalg/heredity.hpp"

#include <functional>

namespace ncm::homalg {

namespace {

bool semisimple(const AlgebraPtr& a) { return a->dim() == 0 || alg::radical(a).cols() == 0; }

DimValue plus(const DimValue& a, long k) { return {static_cast<size_t>(std::max<long>(0, long(a.value) + k)), a.at_least}; }

// a <= b when decidable.
std::optional<bool> leq(const DimValue& a, const DimValue& b) {
  if (!a.at_least && !b.at_least) return a.value <= b.value;
  if (!a.at_least) return a.value <= b.value ? std::optional<bool>(true) : std::nullopt;
  if (!b.at_least) return a.value > b.value ? std::optional<bool>(false) : std::nullopt;
  return std::nullopt;
}

Verdict verdict_of(std::optional<bool> v) { return !v ? Verdict::Skipped : (*v ? Verdict::Pass : Verdict::Fail); }

std::vector<std::vector<size_t>> supports_in_order(size_t n) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t k) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1, k);
      cur.pop_back();
    }
  };
  for (size_t k = 1; k <= n; ++k) rec(0, k);
  return out;
}

Vec support_element(const alg::BasicAlgebra& b, const std::vector<size_t>& s) {
  Vec e(b.algebra->dim());
  for (size_t i : s) e = e + b.idempotents.elements[i];
  return e;
}

}  // namespace

DimValue algebra_gldim(const AlgebraPtr& a, size_t cap) {
  if (semisimple(a)) return {};
  return global_dim(alg::make_basic(a), cap);
}

bool module_projective(const Representation& m) {
  if (semisimple(m.parent)) return true;
  return is_projective(alg::make_basic(m.parent), m);
}

DimValue module_proj_dim(const Representation& m, size_t cap) {
  if (semisimple(m.parent)) return {};
  return proj_dim(alg::make_basic(m.parent), m, cap);
}

std::string support_label(const alg::BasicAlgebra& b, const std::vector<size_t>& support) {
  std::string s;
  for (size_t i : support) s += (s.empty() ? "" : "+") + b.idempotents.labels[i];
  return s;
}

HeredityFlags heredity_flags(const AlgebraPtr& b, const Vec& e, size_t cap) {
  const minors::MinorData md = minors::minor(b, e);
  HeredityFlags f;
  f.ideal = minors::trace_ideal(md);
  const Representation left = alg::submodule(alg::regular_module(b), f.ideal);
  f.left_projective = module_projective(left);
  f.ideal_pd = module_proj_dim(left, cap);
  if (semisimple(b)) {
    f.right_projective = true;
  } else {
    const AlgebraPtr bop = alg::opposite(b);
    f.right_projective = module_projective(minors::right_module_as_left(b, f.ideal, bop, Mat::identity(b->dim())));
  }
  if (semisimple(md.a)) {
    f.p_flat = true;
  } else {
    const AlgebraPtr aop = alg::opposite(md.a);
    f.p_flat = module_projective(minors::right_module_as_left(b, md.p_basis, aop, md.a_embed));
  }
  f.minor_gldim = algebra_gldim(md.a, cap);
  return f;
}

std::optional<HeredityChain> heredity_chain_search(const AlgebraPtr& b, size_t cap) {
  const DimValue g = algebra_gldim(b, cap);
  if (!g.at_least && g.value <= 1) return HeredityChain{{}, b, g};
  const alg::BasicPtr bb = alg::make_basic(b);
  for (const auto& s : supports_in_order(bb->vertex_count())) {
    const Vec e = support_element(*bb, s);
    const HeredityFlags f = heredity_flags(b, e, cap);
    if (!f.heredity() || f.minor_gldim.at_least || f.minor_gldim.value > 1) continue;
    const alg::QuotientAlgebra q = minors::quotient_algebra(b, f.ideal, b->name() + "/" + support_label(*bb, s));
    if (auto rest = heredity_chain_search(q.algebra, cap)) {
      rest->steps.insert(rest->steps.begin(), ChainStep{b, e, support_label(*bb, s), f});
      return rest;
    }
  }
  return std::nullopt;
}

bool classical_quasi_hereditary(const AlgebraPtr& b) {
  if (b->dim() == 0) return true;
  const alg::BasicPtr bb = alg::make_basic(b);
  for (const auto& s : supports_in_order(bb->vertex_count())) {
    const Vec e = support_element(*bb, s);
    const minors::MinorData md = minors::minor(b, e);
    if (!semisimple(md.a)) continue;
    const Mat ideal = minors::trace_ideal(md);
    if (!module_projective(alg::submodule(alg::regular_module(b), ideal))) continue;
    if (classical_quasi_hereditary(minors::quotient_algebra(b, ideal).algebra)) return true;
  }
  return false;
}

ChainBound chain_bound(const HeredityChain& chain, const AlgebraPtr& b, size_t cap) {
  ChainBound cb;
  cb.r = chain.level();
  cb.tail_gldim = chain.tail_gldim;
  cb.gldim = algebra_gldim(b, cap);
  bool pre = true;
  for (const ChainStep& s : chain.steps) {
    cb.d = max_dim(cb.d, s.flags.ideal_pd);
    cb.n = max_dim(cb.n, s.flags.minor_gldim);
    pre = pre && s.flags.left_projective;
  }
  const long r = static_cast<long>(cb.r);
  const DimValue d2 = plus(cb.d, 2);
  DimValue inner = cb.tail_gldim;
  if (long(cb.n.value) - long(d2.value) > long(inner.value)) inner = DimValue{cb.n.value - d2.value, cb.n.at_least};
  cb.bound = plus(inner, r * long(d2.value));
  cb.bound.at_least = cb.bound.at_least || cb.d.at_least;
  std::optional<bool> ok = leq(cb.gldim, cb.bound);
  if (pre) {
    cb.preheredity_bound = plus(cb.tail_gldim, 2 * r);
    const std::optional<bool> ok2 = leq(cb.gldim, *cb.preheredity_bound);
    if (ok2 && !*ok2) ok = false;
  }
  const std::optional<bool> qh = leq(cb.gldim, DimValue{2 * cb.r + 1, false});
  cb.qh_bound_holds = !qh || *qh;
  if (qh && !*qh) ok = false;
  cb.verdict = verdict_of(ok);
  return cb;
}

GldimBound gldim_bound_check(const AlgebraPtr& b, const Vec& e, size_t cap) {
  const HeredityFlags f = heredity_flags(b, e, cap);
  GldimBound gb;
  gb.d = f.ideal_pd;
  gb.n = f.minor_gldim;
  const alg::QuotientAlgebra q = minors::quotient_algebra(b, f.ideal);
  gb.m = algebra_gldim(q.algebra, cap);
  gb.gldim = algebra_gldim(b, cap);
  DimValue left = plus(gb.m, long(gb.d.value) + 2);
  left.at_least = gb.m.at_least || gb.d.at_least;
  gb.bound = max_dim(left, gb.n);
  gb.hypothesis = f.p_flat;
  std::optional<bool> ok = leq(gb.gldim, gb.bound);
  // e = 1: the minor is B itself, so n = gl.dim B even when both are infinite.
  if (e == b->unit()) {
    gb.unit_idempotent = true;
    ok = true;
  }
  gb.inequality = ok.value_or(false);
  gb.verdict = gb.hypothesis ? verdict_of(ok) : Verdict::Skipped;
  return gb;
}

minors::Check semiorthogonality_check(const AlgebraPtr& b, const Vec& e, size_t cap) {
  const minors::MinorData md = minors::minor(b, e);
  return minors::semi_orthogonality(md, minors::trace_ideal(md), cap);
}

}  // namespace ncm::homalg
