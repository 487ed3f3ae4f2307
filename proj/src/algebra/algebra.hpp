#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "exactla/mat.hpp"

namespace ncm::alg {

using la::Mat;
using la::Scalar;
using la::Vec;
using la::operator+;
using la::operator-;
using la::operator*;

struct Term {
  uint32_t index;
  Scalar coeff;
};
using SparseVec = std::vector<Term>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Dense structure constants: tensor[i][j][k] is the coefficient of b_k in b_i * b_j.
using StructureTensor = std::vector<std::vector<Vec>>;

// Finite-dimensional associative unital algebra over Q given by a basis and
// structure constants. Construction validates associativity and the unit.
class Algebra {
 public:
  static AlgebraPtr from_structure_constants(std::vector<std::string> labels, const StructureTensor& tensor,
                                             Vec unit, std::string name = {});
  static AlgebraPtr from_products(std::vector<std::string> labels, std::vector<std::vector<SparseVec>> products,
                                  Vec unit, std::string name = {});

  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const Vec& unit() const { return unit_; }

  const SparseVec& product(size_t i, size_t j) const { return products_[i][j]; }
  Scalar constant(size_t i, size_t j, size_t k) const;
  StructureTensor tensor() const;

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis_vector(size_t i) const { return la::unit_vector(dim(), i); }

  // Matrix of x -> b_i x on coordinates.
  const Mat& left_regular(size_t i) const { return left_regular_[i]; }
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;

  bool same_structure(const Algebra& o) const;

  // Basis indices that generate the algebra together with 1, chosen greedily
  // in basis order. Module-map equations only need these.
  const std::vector<size_t>& generators() const;

  // Renders an element as a signed combination of basis labels.
  std::string format_element(const Vec& v) const;

 private:
  Algebra() = default;
  void validate() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> products_;
  Vec unit_;
  std::vector<Mat> left_regular_;
  mutable std::once_flag generators_once_;
  mutable std::vector<size_t> generators_;
};

struct AlgebraElement {
  AlgebraPtr parent;
  Vec coords;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement unit_element(const AlgebraPtr& a);
bool is_idempotent(const Algebra& a, const Vec& e);

AlgebraPtr opposite(const AlgebraPtr& a);

// Zero-dimensional algebra (the quotient B/B).
AlgebraPtr zero_algebra(std::string name = "0");

// The field Q as a one-dimensional algebra.
AlgebraPtr field_algebra(std::string label = "1");

// Mat(n, Q) on the elementary matrix units E_rc (row-major order).
AlgebraPtr matrix_algebra(size_t n);

// k^n with coordinate idempotents.
AlgebraPtr diagonal_algebra(size_t n);

// Linear map `map` (tgt.dim x src.dim) preserves unit and products.
// Returns a description of the first violation, or nullopt.
std::optional<std::string> algebra_map_violation(const Algebra& src, const Algebra& tgt, const Mat& map);

bool is_algebra_isomorphism(const Algebra& src, const Algebra& tgt, const Mat& map);

// Structure constants of the quotient by a subspace spanned by `ideal`
// (columns), on the complement coordinates chosen by la::quotient_by.
// The caller guarantees that the span is a two-sided ideal.
struct QuotientAlgebra {
  AlgebraPtr algebra;
  la::QuotientMap map;
};
QuotientAlgebra quotient_by_ideal(const AlgebraPtr& a, const Mat& ideal, std::string name = {});

// Subalgebra on a basis given as columns (must be closed under products and
// contain the unit of `a` in its span, or `unit` when it is a corner ring).
AlgebraPtr subalgebra_on_basis(const AlgebraPtr& a, const Mat& basis, const Vec& unit_in_a,
                               std::vector<std::string> labels, std::string name = {});

}  // namespace ncm::alg
