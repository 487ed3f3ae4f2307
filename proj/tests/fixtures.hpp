#pragma once

#include "algebra/algebra.hpp"
#include "algebra/quiver.hpp"

namespace fx {

using ncm::alg::AlgebraPtr;
using ncm::alg::QuiverPresentation;

// Arrow lists are "label:src:tgt" with 1-based vertices; relations are
// lists of (coefficient, written path "b1.a1").
QuiverPresentation quiver(size_t vertices, const std::vector<std::string>& arrows,
                          const std::vector<std::vector<std::pair<int, std::string>>>& relations = {});

QuiverPresentation lambda_pres();
QuiverPresentation kronecker_pres();
QuiverPresentation kx2_pres();
QuiverPresentation a2_pres();

AlgebraPtr lambda();
AlgebraPtr kronecker();
AlgebraPtr kx2();
AlgebraPtr a2();
AlgebraPtr k();
AlgebraPtr mat2();

}  // namespace fx
