#include "hcurve/curve.hpp"

#include <set>

#include "common/error.hpp"

namespace ncm::hcurve {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void same_curve(const ChainSheaf& a, const ChainSheaf& b) {
  if (!a.curve || !b.curve || !(a.curve == b.curve || *a.curve == *b.curve))
    throw Error(ErrorKind::CurveMismatch, a.label() + " and " + b.label() + " live on different curves");
}

std::string tag_of(const ChainSheaf& s) {
  if (s.same_object(ChainSheaf::base(s.curve))) return "L";
  if (s.same_object(ChainSheaf::twisted(s.curve, Divisor::point(s.curve->o)))) return "Lo";
  for (size_t p = 0; p < s.index.size(); ++p)
    if (s.index[p] && s.same_object(ChainSheaf::chain(s.curve, p, s.index[p])))
      return "L" + std::to_string(p + 1) + "_" + std::to_string(s.index[p]);
  throw Error(ErrorKind::InvalidInput, "no tag for " + s.label());
}

}  // namespace

void WeightedP1::validate() const {
  if (rank == 0) throw Error(ErrorKind::InvalidCurve, "rank must be positive");
  std::set<Point> seen;
  for (const SpecialPoint& s : points) {
    const std::string at = "point " + to_string(s.x);
    if (!seen.insert(s.x).second) throw Error(ErrorKind::InvalidCurve, at + " listed twice");
    if (s.x == o) throw Error(ErrorKind::InvalidCurve, at + " coincides with the base point");
    if (s.weight < 2) throw Error(ErrorKind::InvalidCurve, at + " has weight below 2");
    if (s.composition.size() != s.weight)
      throw Error(ErrorKind::InvalidCurve, at + ": composition length differs from the weight");
    size_t sum = 0;
    for (size_t n : s.composition) {
      if (n == 0) throw Error(ErrorKind::InvalidCurve, at + ": composition has a zero part");
      sum += n;
    }
    if (sum != rank) throw Error(ErrorKind::InvalidCurve, at + ": composition does not sum to the rank");
  }
}

std::optional<size_t> WeightedP1::index_of(const Point& x) const {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i].x == x) return i;
  return std::nullopt;
}

CurvePtr make_curve(WeightedP1 c) {
  c.validate();
  return std::make_shared<const WeightedP1>(std::move(c));
}

ChainSheaf ChainSheaf::base(const CurvePtr& c) { return ChainSheaf{c, std::vector<size_t>(c->points.size(), 0), {}}; }

ChainSheaf ChainSheaf::twisted(const CurvePtr& c, const Divisor& d) {
  ChainSheaf s = base(c);
  s.twist = d;
  return s;
}

ChainSheaf ChainSheaf::chain(const CurvePtr& c, size_t point, size_t i) {
  if (point >= c->points.size() || i > c->points[point].weight)
    throw Error(ErrorKind::InvalidInput, "chain index out of range");
  ChainSheaf s = base(c);
  s.index[point] = i;
  return s;
}

std::string ChainSheaf::label() const {
  std::string s = "L";
  for (size_t p = 0; p < index.size(); ++p)
    if (index[p]) s += "_{" + to_string(curve->points[p].x) + "," + std::to_string(index[p]) + "}";
  if (twist == Divisor::point(curve->o)) s += "(-o)";
  else if (!twist.coefficients().empty()) s += "(-(" + to_string(twist) + "))";
  return s;
}

std::vector<ChainSheaf> generating_set(const CurvePtr& c) {
  std::vector<ChainSheaf> out{ChainSheaf::base(c)};
  for (size_t p = 0; p < c->points.size(); ++p)
    for (size_t i = 1; i <= c->points[p].weight; ++i) out.push_back(ChainSheaf::chain(c, p, i));
  return out;
}

std::vector<ChainSheaf> tilting_set(const CurvePtr& c) {
  std::vector<ChainSheaf> out{ChainSheaf::base(c), ChainSheaf::twisted(c, Divisor::point(c->o))};
  for (size_t p = 0; p < c->points.size(); ++p)
    for (size_t i = 1; i < c->points[p].weight; ++i) out.push_back(ChainSheaf::chain(c, p, i));
  return out;
}

Divisor hom_divisor(const ChainSheaf& src, const ChainSheaf& tgt) {
  same_curve(src, tgt);
  Divisor d = src.twist - tgt.twist;
  const auto& pts = src.curve->points;
  for (size_t p = 0; p < pts.size(); ++p) {
    const long k = floor_div(long(src.index[p]) - long(tgt.index[p]), long(pts[p].weight));
    if (k) d.add(pts[p].x, k);
  }
  return d;
}

ExtDims hom_and_ext_dims(const ChainSheaf& src, const ChainSheaf& tgt) {
  const long deg = hom_divisor(src, tgt).degree();
  return {size_t(std::max<long>(deg + 1, 0)), size_t(std::max<long>(-deg - 1, 0))};
}

std::optional<Vec> HomSpace::coordinates(const RationalFunction& f) const {
  return section_coordinates(basis, divisor, f);
}

HomSpace hom_basis(const ChainSheaf& src, const ChainSheaf& tgt) {
  const Divisor d = hom_divisor(src, tgt);
  return HomSpace{src, tgt, d, sections_basis(d)};
}

HomElement compose(const HomElement& f, const HomElement& g) {
  same_curve(f.src, g.tgt);
  if (!g.tgt.same_object(f.src))
    throw Error(ErrorKind::ChainMismatch, "cannot compose " + f.src.label() + " -> " + f.tgt.label() + " after " +
                                              g.src.label() + " -> " + g.tgt.label());
  HomElement h{g.src, f.tgt, f.f * g.f};
  const Divisor d = hom_divisor(h.src, h.tgt);
  if (!in_sections(h.f, d))
    throw Error(ErrorKind::DivisorViolation,
                to_string(h.f) + " is not a section of O(" + to_string(d) + ") for " + h.src.label() + " -> " +
                    h.tgt.label());
  return h;
}

ThetaMaps theta_maps(const CurvePtr& c, const Point& x) {
  const auto p = c->index_of(x);
  if (!p) throw Error(ErrorKind::PointNotSpecial, to_string(x) + " is not a weighted point");
  const size_t kappa = c->points[*p].weight;
  ThetaMaps t;
  for (size_t i = 1; i <= kappa; ++i) {
    const ChainSheaf src = ChainSheaf::chain(c, *p, i);
    const ChainSheaf tgt = i == 1 ? ChainSheaf::base(c) : ChainSheaf::chain(c, *p, i - 1);
    const HomSpace h = hom_basis(src, tgt);
    if (h.dim() != 1 || !(h.basis[0] == RationalFunction::constant(1)))
      throw Error(ErrorKind::DivisorViolation, "theta step " + std::to_string(i) + " is not spanned by 1");
    t.steps.push_back(HomElement{src, tgt, h.basis[0]});
  }
  const ChainSheaf lo = ChainSheaf::twisted(c, Divisor::point(c->o));
  const HomSpace iso = hom_basis(lo, ChainSheaf::chain(c, *p, kappa));
  if (iso.dim() != 1) throw Error(ErrorKind::DivisorViolation, "L(-o) -> L_{x,kappa} is not one-dimensional");
  t.iso = HomElement{iso.src, iso.tgt, iso.basis[0]};
  HomElement acc = t.iso;
  for (size_t i = kappa; i-- > 0;) acc = compose(t.steps[i], acc);
  t.composite = acc;
  t.coords = *hom_basis(lo, ChainSheaf::base(c)).coordinates(acc.f);
  return t;
}

HomElement theta_composite(const CurvePtr& c, const Point& x) {
  if (c->index_of(x)) return theta_maps(c, x).composite;
  if (x == c->o) throw Error(ErrorKind::InvalidInput, "theta is undefined at the base point");
  const ChainSheaf lx = ChainSheaf::twisted(c, Divisor::point(x));
  const ChainSheaf lo = ChainSheaf::twisted(c, Divisor::point(c->o));
  const HomSpace iso = hom_basis(lo, lx);
  const HomElement one{lx, ChainSheaf::base(c), RationalFunction::constant(1)};
  return compose(one, HomElement{lo, lx, iso.basis[0]});
}

std::optional<size_t> TiltingAlgebra::object_index(const std::string& tag) const {
  for (size_t i = 0; i < tags.size(); ++i)
    if (tags[i] == tag) return i;
  return std::nullopt;
}

TiltingAlgebra tilting_endomorphism_algebra(const CurvePtr& c) {
  TiltingAlgebra t;
  t.curve = c;
  t.objects = tilting_set(c);
  const size_t m = t.objects.size();
  for (const ChainSheaf& s : t.objects) t.tags.push_back(tag_of(s));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      const ExtDims e = hom_and_ext_dims(t.objects[a], t.objects[b]);
      if (e.h1)
        throw Error(ErrorKind::TiltingObstruction,
                    "Ext^1(" + t.objects[a].label() + ", " + t.objects[b].label() + ") has dimension " +
                        std::to_string(e.h1));
    }
  size_t offset = 0;
  std::vector<std::string> labels;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      TiltingAlgebra::Block blk{a, b, offset, hom_basis(t.objects[a], t.objects[b])};
      if (a == b && blk.space.dim() != 1)
        throw Error(ErrorKind::TiltingObstruction, "End(" + t.objects[a].label() + ") is not one-dimensional");
      for (size_t k = 0; k < blk.space.dim(); ++k) {
        if (a == b) labels.push_back("e_" + t.tags[a]);
        else
          labels.push_back("h_" + t.tags[a] + "_" + t.tags[b] +
                           (blk.space.dim() > 1 ? "_" + std::to_string(k + 1) : ""));
      }
      offset += blk.space.dim();
      t.blocks.push_back(std::move(blk));
    }
  const size_t n = offset;
  std::vector<std::vector<alg::SparseVec>> products(n, std::vector<alg::SparseVec>(n));
  for (const auto& x : t.blocks)
    for (size_t p = 0; p < x.space.dim(); ++p)
      for (size_t c2 = 0; c2 < m; ++c2) {
        const auto& y = t.block(x.tgt, c2);
        const auto& z = t.block(x.src, c2);
        for (size_t q = 0; q < y.space.dim(); ++q) {
          const HomElement h = compose(HomElement{y.space.src, y.space.tgt, y.space.basis[q]},
                                       HomElement{x.space.src, x.space.tgt, x.space.basis[p]});
          const Vec coords = *z.space.coordinates(h.f);
          alg::SparseVec& out = products[x.offset + p][y.offset + q];
          for (size_t r = 0; r < coords.size(); ++r)
            if (!la::is_zero(coords[r])) out.push_back(alg::Term{uint32_t(z.offset + r), coords[r]});
        }
      }
  Vec unit(n);
  for (size_t a = 0; a < m; ++a) unit[t.block(a, a).offset] = 1;
  t.algebra = alg::Algebra::from_products(labels, std::move(products), unit, "End(T)^op");
  return t;
}

}  // namespace ncm::hcurve
