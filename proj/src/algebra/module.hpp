#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/algebra.hpp"

namespace ncm::alg {

// Left module: one action matrix per algebra basis element.
struct Representation {
  AlgebraPtr parent;
  size_t dim = 0;
  std::vector<Mat> action;

  Mat act(const Vec& a) const;
};

// Checks the homomorphism and unit conditions; returns the first violation.
std::optional<std::string> module_violation(const Representation& m);
void validate_module(const Representation& m);

bool same_parent(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_parent(const AlgebraPtr& a, const AlgebraPtr& b);

Representation zero_module(const AlgebraPtr& a);
Representation regular_module(const AlgebraPtr& a);
Representation direct_sum(const Representation& m, const Representation& n);
Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);

// Submodule spanned by the columns of `basis` (must be invariant).
Representation submodule(const Representation& m, const Mat& basis);

struct QuotientModule {
  Representation module;
  la::QuotientMap map;
};
QuotientModule quotient_module(const Representation& m, const Mat& span);

// Smallest submodule containing the columns of `gens`.
Mat generated_submodule(const Representation& m, const Mat& gens);

// rad(A)·M for a radical given as columns in algebra coordinates.
Mat radical_submodule(const Representation& m, const Mat& rad);

// Basis of Hom_A(M, N); each map is a (N.dim x M.dim) matrix.
std::vector<Mat> hom_space(const Representation& m, const Representation& n);

bool is_homomorphism(const Representation& m, const Representation& n, const Mat& f);

// An explicit isomorphism M -> N if one is found among combinations of a
// Hom basis. A returned matrix is always a certified isomorphism.
std::optional<Mat> find_isomorphism(const Representation& m, const Representation& n);

// Module over `op` (the opposite algebra of m.parent) on the dual space.
Representation dual_module(const Representation& m, const AlgebraPtr& op);

// D(R) for a right ideal R of A given by basis columns: the left module
// with (b·f)(x) = f(xb).
Representation dual_of_right_ideal(const AlgebraPtr& a, const Mat& right_ideal);

// Inflation of a module over A/I along the projection matrix.
Representation inflate(const Representation& m, const AlgebraPtr& big, const Mat& projection);

// Restriction along an algebra map `phi` (tgt.dim x src.dim) from `src` into m.parent.
Representation restrict_module(const Representation& m, const AlgebraPtr& src, const Mat& phi);

// Annihilator test: every element of the span acts as zero.
bool annihilated_by(const Representation& m, const Mat& span);

}  // namespace ncm::alg
