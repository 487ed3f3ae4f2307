#pragma once

#include <string>
#include <vector>

#include "algebra/algebra.hpp"

namespace ncm::alg {

// Jacobson radical as a basis (columns) of a subspace of the algebra.
Mat radical(const AlgebraPtr& a);

// Span of all products x*y with x in span(u), y in span(v).
Mat product_span(const Algebra& a, const Mat& u, const Mat& v);

// Smallest two-sided ideal containing the columns of `gens`.
Mat ideal_generated(const Algebra& a, const Mat& gens);

bool is_two_sided_ideal(const Algebra& a, const Mat& span);

// Smallest k with rad^k = 0 (0 for the zero algebra).
size_t nilpotency_index(const Algebra& a, const Mat& ideal);

Mat center(const Algebra& a);

bool is_commutative(const Algebra& a);

// eAe on a basis drawn from {e b_i e}; embedding maps its coordinates into A.
struct Corner {
  AlgebraPtr algebra;
  Mat embedding;
};
Corner corner_algebra(const AlgebraPtr& a, const Vec& e, std::string name = {});

struct Idempotents {
  std::vector<Vec> elements;
  std::vector<std::string> labels;
};

// Complete set of orthogonal primitive idempotents, lifted from the split
// basic top A/rad A. Throws NonBasicTop otherwise.
Idempotents primitive_idempotents(const AlgebraPtr& a);

// Semisimple quotient is a product of copies of the ground field.
bool has_split_basic_top(const AlgebraPtr& a);

// Rational roots of a polynomial given by ascending coefficients.
std::vector<Scalar> rational_roots(const Vec& coeffs);

// Minimal polynomial of x (monic, ascending coefficients) inside the corner
// algebra with unit `one`.
Vec minimal_polynomial(const Algebra& a, const Vec& x, const Vec& one);

}  // namespace ncm::alg
