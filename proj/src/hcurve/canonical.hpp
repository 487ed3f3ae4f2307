#pragma once

#include <string>
#include <vector>

#include "algebra/quiver.hpp"
#include "hcurve/curve.hpp"

namespace ncm::hcurve {

// Bound quiver with a source s, a sink w and r arms s -> x{j}_1 -> ... -> w
// of k_j arrows a{j}_1, ..., a{j}_{k_j}; relations a_j = a_1 + lambda_j a_2
// for j >= 3, where a_j is the composite along arm j.
struct CanonicalAlgebraPresentation {
  std::vector<size_t> weights;
  std::vector<Scalar> lambdas;  // lambda_3, ..., lambda_r
  alg::QuiverPresentation quiver;
  alg::QuiverAlgebra algebra;
};

// Throws InvalidWeights or RepeatedLambda.
CanonicalAlgebraPresentation canonical_algebra(const std::vector<size_t>& weights, const std::vector<Scalar>& lambdas);

struct CanonicalMatch {
  std::vector<size_t> weights;
  std::vector<Scalar> lambdas;
  std::vector<Point> arm_points;  // special points, then any auxiliary points for r = 2
  Mat identification;             // R basis -> endT basis
};

// Arms follow the input order of S; arm j's first arrow is rescaled so its
// composite is theta_1 + lambda_j theta_2. When |S| < 2 the missing arms are
// single arrows theta_y at the smallest non-negative integers y off S and o.
// Throws NotCanonicalShape.
CanonicalMatch match_canonical(const alg::AlgebraPtr& endT, const TiltingAlgebra& labeling);

}  // namespace ncm::hcurve
