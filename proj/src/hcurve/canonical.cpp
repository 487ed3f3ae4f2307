#include "hcurve/canonical.hpp"

#include "common/error.hpp"

namespace ncm::hcurve {

namespace {

std::string arm_vertex(size_t j, size_t i) { return "x" + std::to_string(j + 1) + "_" + std::to_string(i); }

[[noreturn]] void mismatch(const std::string& why) { throw Error(ErrorKind::NotCanonicalShape, why); }

}  // namespace

CanonicalAlgebraPresentation canonical_algebra(const std::vector<size_t>& weights, const std::vector<Scalar>& lambdas) {
  const size_t r = weights.size();
  if (r < 2) throw Error(ErrorKind::InvalidWeights, "need at least two arms");
  for (size_t k : weights) {
    if (k < 1) throw Error(ErrorKind::InvalidWeights, "arm length must be positive");
    if (r > 2 && k < 2) throw Error(ErrorKind::InvalidWeights, "with more than two arms every weight is at least 2");
  }
  if (lambdas.size() != r - 2)
    throw Error(ErrorKind::InvalidWeights, "expected " + std::to_string(r - 2) + " parameters");
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (la::is_zero(lambdas[i])) throw Error(ErrorKind::RepeatedLambda, "parameter 0 repeats the first arm");
    for (size_t j = 0; j < i; ++j)
      if (lambdas[i] == lambdas[j]) throw Error(ErrorKind::RepeatedLambda, "parameter " + la::to_string(lambdas[i]) + " repeated");
  }

  CanonicalAlgebraPresentation c;
  c.weights = weights;
  c.lambdas = lambdas;
  auto& q = c.quiver;
  q.vertices.push_back("s");
  std::vector<std::vector<size_t>> arm_vertices(r);
  for (size_t j = 0; j < r; ++j) {
    arm_vertices[j].push_back(0);
    for (size_t i = 1; i < weights[j]; ++i) {
      arm_vertices[j].push_back(q.vertices.size());
      q.vertices.push_back(arm_vertex(j, i));
    }
  }
  const size_t sink = q.vertices.size();
  q.vertices.push_back("w");
  std::vector<alg::Path> composite(r);
  for (size_t j = 0; j < r; ++j) {
    arm_vertices[j].push_back(sink);
    composite[j].vertex = 0;
    for (size_t i = 0; i < weights[j]; ++i) {
      const uint32_t id = uint32_t(q.arrows.size());
      q.arrows.push_back(alg::Arrow{"a" + std::to_string(j + 1) + "_" + std::to_string(i + 1), arm_vertices[j][i],
                                    arm_vertices[j][i + 1]});
      composite[j].arrows.insert(composite[j].arrows.begin(), id);
    }
  }
  for (size_t j = 2; j < r; ++j)
    q.relations.push_back(
        alg::Relation{{1, composite[j]}, {-1, composite[0]}, {Scalar(-lambdas[j - 2]), composite[1]}});
  std::string name = "R(";
  for (size_t j = 0; j < r; ++j) name += (j ? "," : "") + std::to_string(weights[j]);
  for (size_t j = 0; j < lambdas.size(); ++j) name += (j ? "," : ";") + la::to_string(lambdas[j]);
  c.algebra = alg::algebra_from_quiver(q, 32, name + ")");
  return c;
}

CanonicalMatch match_canonical(const alg::AlgebraPtr& endT, const TiltingAlgebra& labeling) {
  const CurvePtr& c = labeling.curve;
  if (endT->dim() != labeling.algebra->dim())
    mismatch("algebra has dimension " + std::to_string(endT->dim()) + ", labeling expects " +
             std::to_string(labeling.algebra->dim()));
  const size_t n = endT->dim();
  const auto obj = [&](const std::string& tag) {
    const auto i = labeling.object_index(tag);
    if (!i) mismatch("labeling lacks object " + tag);
    return *i;
  };
  const size_t l = obj("L"), lo = obj("Lo");
  const auto& top = labeling.block(lo, l);
  if (top.space.dim() != 2) mismatch("Hom(L(-o), L) is not two-dimensional");
  const auto single = [&](size_t src, size_t tgt) {
    const auto& b = labeling.block(src, tgt);
    if (b.space.dim() != 1)
      mismatch("Hom(" + labeling.tags[src] + ", " + labeling.tags[tgt] + ") is not one-dimensional");
    return la::unit_vector(n, b.offset);
  };

  CanonicalMatch m;
  // Arrow elements per arm, first arrow (out of L) first.
  std::vector<std::vector<Vec>> arms;
  std::vector<std::vector<size_t>> arm_objects;
  for (size_t p = 0; p < c->points.size(); ++p) {
    const size_t kappa = c->points[p].weight;
    std::vector<size_t> chain{l};
    for (size_t i = 1; i < kappa; ++i) chain.push_back(obj("L" + std::to_string(p + 1) + "_" + std::to_string(i)));
    chain.push_back(lo);
    std::vector<Vec> arrows;
    for (size_t i = 0; i + 1 < chain.size(); ++i) arrows.push_back(single(chain[i + 1], chain[i]));
    arms.push_back(arrows);
    arm_objects.push_back(chain);
    m.weights.push_back(kappa);
    m.arm_points.push_back(c->points[p].x);
  }
  for (long y = 0; arms.size() < 2; ++y) {
    const Point pt = Point::at(y);
    if (c->index_of(pt) || pt == c->o) continue;
    const auto coords = top.space.coordinates(theta_composite(c, pt).f);
    if (!coords) mismatch("theta at " + to_string(pt) + " is not a section of Hom(L(-o), L)");
    Vec v(n);
    for (size_t k = 0; k < 2; ++k) v[top.offset + k] = (*coords)[k];
    arms.push_back({v});
    arm_objects.push_back({l, lo});
    m.weights.push_back(1);
    m.arm_points.push_back(pt);
  }

  const auto composite_of = [&](const std::vector<Vec>& arrows) {
    Vec acc = arrows.back();
    for (size_t i = arrows.size() - 1; i-- > 0;) acc = endT->multiply(acc, arrows[i]);
    return acc;
  };
  const auto top_coords = [&](const Vec& v, size_t arm) {
    for (size_t k = 0; k < n; ++k)
      if ((k < top.offset || k >= top.offset + 2) && !la::is_zero(v[k]))
        mismatch("composite of arm " + std::to_string(arm + 1) + " has a component on " + endT->labels()[k]);
    return Vec{v[top.offset], v[top.offset + 1]};
  };
  const Vec t1 = top_coords(composite_of(arms[0]), 0);
  const Vec t2 = top_coords(composite_of(arms[1]), 1);
  const Mat basis = Mat::from_columns({t1, t2}, 2);
  if (la::rank(basis) != 2) mismatch("composites of arms 1 and 2 do not span Hom(L(-o), L)");
  for (size_t j = 2; j < arms.size(); ++j) {
    const Vec tj = top_coords(composite_of(arms[j]), j);
    const Vec ab = *la::solve(basis, tj);
    const std::string arm = "arm " + std::to_string(j + 1);
    if (la::is_zero(ab[0])) mismatch(arm + " composite is a multiple of arm 2");
    const Scalar lambda = ab[1] / ab[0];
    if (la::is_zero(lambda)) mismatch(arm + " composite is a multiple of arm 1");
    for (const Scalar& prev : m.lambdas)
      if (prev == lambda) mismatch(arm + " repeats parameter " + la::to_string(lambda));
    m.lambdas.push_back(lambda);
    arms[j][0] = Scalar(1 / ab[0]) * arms[j][0];
  }

  CanonicalAlgebraPresentation r;
  try {
    r = canonical_algebra(m.weights, m.lambdas);
  } catch (const Error& e) {
    mismatch(std::string("no canonical algebra for these parameters: ") + e.what());
  }
  const auto& ra = r.algebra;
  if (ra.algebra->dim() != n)
    mismatch("canonical algebra has dimension " + std::to_string(ra.algebra->dim()) + ", End(T)^op has " +
             std::to_string(n));
  // Vertex and arrow images.
  std::vector<Vec> vimg(r.quiver.vertices.size());
  vimg[0] = la::unit_vector(n, labeling.block(l, l).offset);
  vimg.back() = la::unit_vector(n, labeling.block(lo, lo).offset);
  std::vector<Vec> aimg;
  for (size_t j = 0; j < arms.size(); ++j) {
    for (size_t i = 1; i + 1 < arm_objects[j].size(); ++i) {
      const size_t o = arm_objects[j][i];
      vimg[r.quiver.arrows[aimg.size() + i - 1].target] = la::unit_vector(n, labeling.block(o, o).offset);
    }
    for (const Vec& a : arms[j]) aimg.push_back(a);
  }
  Mat map(n, n);
  for (size_t b = 0; b < n; ++b) {
    const alg::Path& p = ra.basis_paths[b];
    Vec v = vimg[p.vertex];
    if (!p.arrows.empty()) {
      v = aimg[p.arrows[0]];
      for (size_t i = 1; i < p.arrows.size(); ++i) v = endT->multiply(v, aimg[p.arrows[i]]);
    }
    map.set_column(b, v);
  }
  if (la::rank(map) != n) mismatch("induced map from " + ra.algebra->name() + " is not bijective");
  if (auto why = alg::algebra_map_violation(*ra.algebra, *endT, map))
    mismatch("induced map from " + ra.algebra->name() + " is not multiplicative: " + *why);
  m.identification = map;
  return m;
}

}  // namespace ncm::hcurve
