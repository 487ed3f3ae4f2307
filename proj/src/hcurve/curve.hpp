#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra/algebra.hpp"
#include "hcurve/rational.hpp"

namespace ncm::hcurve {

struct SpecialPoint {
  Point x;
  size_t weight = 2;
  std::vector<size_t> composition;  // length weight, sums to the rank
  bool operator==(const SpecialPoint&) const = default;
};

// P^1 with weighted points and local compositions; o is the base point.
struct WeightedP1 {
  size_t rank = 1;
  Point o = Point::inf();
  std::vector<SpecialPoint> points;

  // Throws InvalidCurve.
  void validate() const;
  std::optional<size_t> index_of(const Point& x) const;
  bool operator==(const WeightedP1&) const = default;
};
using CurvePtr = std::shared_ptr<const WeightedP1>;

CurvePtr make_curve(WeightedP1 c);

// L_{x,i}(-D): chain index per special point and a twist divisor D.
struct ChainSheaf {
  CurvePtr curve;
  std::vector<size_t> index;  // parallel to curve->points
  Divisor twist;

  static ChainSheaf base(const CurvePtr& c);
  static ChainSheaf twisted(const CurvePtr& c, const Divisor& d);
  static ChainSheaf chain(const CurvePtr& c, size_t point, size_t i);

  bool same_object(const ChainSheaf& o) const { return index == o.index && twist == o.twist; }
  // L, L(-o), L_{0,1}, ...
  std::string label() const;
};

// L and L_{x,i} for 1 <= i <= kappa(x).
std::vector<ChainSheaf> generating_set(const CurvePtr& c);
// L, L(-o), then L_{x,i} for 1 <= i < kappa(x), points in input order.
std::vector<ChainSheaf> tilting_set(const CurvePtr& c);

// Throws CurveMismatch.
Divisor hom_divisor(const ChainSheaf& src, const ChainSheaf& tgt);

struct ExtDims {
  size_t h0 = 0;
  size_t h1 = 0;
};
ExtDims hom_and_ext_dims(const ChainSheaf& src, const ChainSheaf& tgt);

struct HomSpace {
  ChainSheaf src, tgt;
  Divisor divisor;
  std::vector<RationalFunction> basis;

  size_t dim() const { return basis.size(); }
  std::optional<Vec> coordinates(const RationalFunction& f) const;
};
HomSpace hom_basis(const ChainSheaf& src, const ChainSheaf& tgt);

struct HomElement {
  ChainSheaf src, tgt;
  RationalFunction f;
};

// f after g. Throws ChainMismatch or DivisorViolation.
HomElement compose(const HomElement& f, const HomElement& g);

struct ThetaMaps {
  std::vector<HomElement> steps;  // theta_{x,i} : L_{x,i} -> L_{x,i-1}, i = 1..kappa
  HomElement iso;                 // L(-o) -> L_{x,kappa}
  HomElement composite;           // theta_x : L(-o) -> L
  Vec coords;                     // theta_x in hom_basis(L(-o), L)
};

// Throws PointNotSpecial when x is not in S.
ThetaMaps theta_maps(const CurvePtr& c, const Point& x);
// theta_x for any x != o; points off S behave as weight 1.
HomElement theta_composite(const CurvePtr& c, const Point& x);

struct TiltingAlgebra {
  struct Block {
    size_t src = 0, tgt = 0, offset = 0;
    HomSpace space;
  };
  alg::AlgebraPtr algebra;
  CurvePtr curve;
  std::vector<ChainSheaf> objects;
  std::vector<std::string> tags;  // L, Lo, L1_1, ...
  std::vector<Block> blocks;

  const Block& block(size_t src, size_t tgt) const { return blocks[src * objects.size() + tgt]; }
  std::optional<size_t> object_index(const std::string& tag) const;
};

// End(T)^op for T the sum of the tilting set, phi * psi = psi o phi.
// Throws TiltingObstruction when some Ext^1 is nonzero.
TiltingAlgebra tilting_endomorphism_algebra(const CurvePtr& c);

}  // namespace ncm::hcurve
