#pragma once

#include <string>
#include <vector>

#include "minors/minor.hpp"

namespace ncm::minors {

// [[A, F], [F', E]] = End_A(A + F)^op with F' = Hom_A(F, A), E = End_A(F)^op.
// Basis order: A, then F, F', E blocks labelled f*, g*, h*.
struct EndoConstruction {
  AlgebraPtr algebra;
  Vec e;           // projection onto the A summand
  Vec complement;  // 1 - e
  size_t f_dim = 0, fprime_dim = 0, e_dim = 0;
  bool recovers = false;  // minor at e is isomorphic to A via the identity on A-coordinates
  std::string witness;
};
EndoConstruction endomorphism_construction(const AlgebraPtr& a, const Representation& f);

// [[A, H], [I, H]] inside Mat_2(H), I the conductor {x in A : Hx in A}.
struct GlueResult {
  AlgebraPtr algebra;
  Mat conductor;  // basis of I in A coordinates
  Vec e;          // idempotent whose projective is the [[H],[H]] column
  size_t a_dim = 0, h_dim = 0, i_dim = 0;
};
// `inclusion` is h.dim x a.dim. Throws NotMonomorphism / QuotientNotSemisimple.
GlueResult subhereditary_glue(const AlgebraPtr& a, const AlgebraPtr& h, const Mat& inclusion);

// Q-L bimodule: left[i] acts by the Q basis element i, right[j] is v -> v*l_j.
struct Bimodule {
  size_t dim = 0;
  std::vector<Mat> left;
  std::vector<Mat> right;
};

// [[Q, E], [0, L]] on the basis (Q, E, L). Throws ActionsDoNotCommute, NotAModule.
AlgebraPtr triangular_algebra(const AlgebraPtr& q, const AlgebraPtr& l, const Bimodule& e, std::string name = {});

}  // namespace ncm::minors
