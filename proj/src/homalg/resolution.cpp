#include "homalg/resolution.hpp"

namespace ncm::homalg {

std::string DimValue::to_string() const { return (at_least ? ">=" : "") + std::to_string(value); }

DimValue max_dim(const DimValue& a, const DimValue& b) {
  DimValue r;
  r.value = std::max(a.value, b.value);
  r.at_least = (a.at_least && a.value >= b.value) || (b.at_least && b.value >= a.value);
  return r;
}

ProjectiveSum projective_sum(const BasicPtr& b, const std::vector<size_t>& vertices) {
  ProjectiveSum s;
  s.vertices = vertices;
  s.module = alg::zero_module(b->algebra);
  for (size_t v : vertices) {
    s.offsets.push_back(s.module.dim);
    s.module = alg::direct_sum(s.module, b->projectives[v]);
  }
  return s;
}

ProjectiveCover projective_cover(const BasicPtr& b, const Representation& m) {
  alg::require_same_parent(b->algebra, m.parent);
  const Mat rad_m = alg::radical_submodule(m, b->radical);
  ProjectiveCover pc;
  pc.multiplicities.assign(b->vertex_count(), 0);
  std::vector<size_t> vertices;
  std::vector<Vec> generators;
  for (size_t i = 0; i < b->vertex_count(); ++i) {
    const Mat ei = m.act(b->idempotents.elements[i]);
    Mat current = la::column_space_basis(ei * rad_m);
    size_t rk = current.cols();
    for (size_t c = 0; c < m.dim; ++c) {
      const Mat cand = current.hstack(Mat::from_columns({ei.column(c)}, m.dim));
      if (la::rank(cand) > rk) {
        current = cand;
        ++rk;
        vertices.push_back(i);
        generators.push_back(ei.column(c));
        ++pc.multiplicities[i];
      }
    }
  }
  pc.cover = projective_sum(b, vertices);
  pc.map = Mat(m.dim, pc.cover.module.dim);
  for (size_t s = 0; s < vertices.size(); ++s) {
    const Mat& pb = b->projective_bases[vertices[s]];
    for (size_t k = 0; k < pb.cols(); ++k)
      pc.map.set_column(pc.cover.offsets[s] + k, m.act(pb.column(k)).apply(generators[s]));
  }
  return pc;
}

ProjectiveResolution projective_resolution(const BasicPtr& b, const Representation& m, size_t cap) {
  ProjectiveResolution res;
  res.module = m;
  ProjectiveCover pc = projective_cover(b, m);
  res.terms.push_back(pc.cover);
  res.differentials.push_back(pc.map);
  Mat pi = pc.map;
  for (size_t j = 0;; ++j) {
    const Mat k = la::kernel_basis(pi);
    if (k.cols() == 0) {
      res.length = j;
      return res;
    }
    if (j == cap) {
      res.length = cap;
      res.truncated = true;
      return res;
    }
    const Representation syz = alg::submodule(res.terms[j].module, k);
    ProjectiveCover next = projective_cover(b, syz);
    res.terms.push_back(next.cover);
    res.differentials.push_back(k * next.map);
    pi = next.map;
  }
}

namespace {

struct CochainTerm {
  std::vector<size_t> offsets;  // column offset of each summand block
  size_t dim = 0;
};

}  // namespace

std::vector<size_t> ext_dims(const BasicPtr& b, const ProjectiveResolution& res, const Representation& n,
                             size_t max_degree) {
  alg::require_same_parent(b->algebra, n.parent);
  const size_t nv = b->vertex_count();
  std::vector<Mat> corner(nv);  // basis of e_v N
  std::vector<Vec> generator(nv);
  for (size_t v = 0; v < nv; ++v) {
    corner[v] = la::column_space_basis(n.act(b->idempotents.elements[v]));
    generator[v] = *la::solve(b->projective_bases[v], b->idempotents.elements[v]);
  }
  const size_t available = res.terms.size();
  if (res.truncated && max_degree + 1 >= available)
    throw Error(ErrorKind::CapExceeded, "resolution truncated before degree " + std::to_string(max_degree + 1));

  auto term_of = [&](size_t j) {
    CochainTerm t;
    if (j >= available) return t;
    for (size_t v : res.terms[j].vertices) {
      t.offsets.push_back(t.dim);
      t.dim += corner[v].cols();
    }
    return t;
  };

  // delta^j : Hom(P_j, N) -> Hom(P_{j+1}, N), f -> f o d_{j+1}.
  auto coboundary = [&](size_t j) {
    const CochainTerm src = term_of(j), tgt = term_of(j + 1);
    Mat delta(tgt.dim, src.dim);
    if (j + 1 >= available || src.dim == 0 || tgt.dim == 0) return delta;
    const ProjectiveSum& pj = res.terms[j];
    const ProjectiveSum& pj1 = res.terms[j + 1];
    const Mat& d = res.differentials[j + 1];
    for (size_t t = 0; t < pj1.vertices.size(); ++t) {
      const size_t vt = pj1.vertices[t];
      if (corner[vt].cols() == 0) continue;
      Vec g(pj1.module.dim);
      for (size_t k = 0; k < generator[vt].size(); ++k) g[pj1.offsets[t] + k] = generator[vt][k];
      const Vec y = d.apply(g);
      for (size_t s = 0; s < pj.vertices.size(); ++s) {
        const size_t vs = pj.vertices[s];
        if (corner[vs].cols() == 0) continue;
        const Mat& pb = b->projective_bases[vs];
        Vec ys(pb.cols());
        bool any = false;
        for (size_t k = 0; k < ys.size(); ++k) {
          ys[k] = y[pj.offsets[s] + k];
          any = any || sgn(ys[k]) != 0;
        }
        if (!any) continue;
        const Mat act = n.act(pb.apply(ys));
        const Mat img = act * corner[vs];
        auto coords = la::solve_matrix(corner[vt], img);
        if (!coords) throw Error(ErrorKind::InvalidInput, "Hom complex image left the corner e_v N");
        for (size_t r = 0; r < coords->rows(); ++r)
          for (size_t c = 0; c < coords->cols(); ++c) delta(tgt.offsets[t] + r, src.offsets[s] + c) = (*coords)(r, c);
      }
    }
    return delta;
  };

  std::vector<size_t> out;
  size_t prev_rank = 0;
  for (size_t j = 0; j <= max_degree; ++j) {
    const CochainTerm cj = term_of(j);
    const size_t rk = la::rank(coboundary(j));
    out.push_back(cj.dim - rk - prev_rank);
    prev_rank = rk;
  }
  return out;
}

size_t ext_dim(const BasicPtr& b, const Representation& m, const Representation& n, size_t i, size_t cap) {
  if (i > cap) {
    const ProjectiveResolution r = projective_resolution(b, m, cap);
    if (r.truncated)
      throw Error(ErrorKind::CapExceeded,
                  "Ext degree " + std::to_string(i) + " exceeds cap " + std::to_string(cap));
    return 0;
  }
  const ProjectiveResolution r = projective_resolution(b, m, i + 1);
  return ext_dims(b, r, n, i)[i];
}

DimValue proj_dim(const BasicPtr& b, const Representation& m, size_t cap) {
  const ProjectiveResolution r = projective_resolution(b, m, cap);
  return {r.length, r.truncated};
}

DimValue inj_dim(const BasicPtr& b, const Representation& m, size_t cap) {
  const ProjectiveResolution r = projective_resolution(b, b->top_module(), cap + 1);
  const std::vector<size_t> e = ext_dims(b, r, m, cap);
  size_t last = 0;
  for (size_t i = 0; i <= cap; ++i)
    if (e[i] != 0) last = i;
  const bool top_beyond_cap = r.truncated || r.length > cap;
  return {last, last == cap && top_beyond_cap && e[cap] != 0};
}

DimValue global_dim(const BasicPtr& b, size_t cap) {
  DimValue g;
  for (const Representation& s : b->simples) g = max_dim(g, proj_dim(b, s, cap));
  return g;
}

bool is_projective(const BasicPtr& b, const Representation& m) {
  return projective_cover(b, m).cover.module.dim == m.dim;
}

}  // namespace ncm::homalg
