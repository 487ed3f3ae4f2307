#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra/module.hpp"
#include "algebra/structure.hpp"

namespace ncm::alg {

// An algebra with split basic top together with its radical, primitive
// idempotents, indecomposable projectives and simples. Built once and shared.
struct BasicAlgebra {
  AlgebraPtr algebra;
  Mat radical;
  Idempotents idempotents;
  std::vector<Mat> projective_bases;  // basis of A e_i inside A (columns)
  std::vector<Representation> projectives;
  std::vector<Representation> simples;

  size_t vertex_count() const { return idempotents.elements.size(); }
  std::optional<size_t> index_of(const std::string& label) const;

  // Right ideal e_i A and the indecomposable injective D(e_i A).
  Mat right_projective_basis(size_t i) const;
  Representation injective(size_t i) const;

  // A/rad A as a left module (direct sum of the simples).
  Representation top_module() const;
};
using BasicPtr = std::shared_ptr<const BasicAlgebra>;

// Throws NonBasicTop when the top is not split basic.
BasicPtr make_basic(const AlgebraPtr& a);

}  // namespace ncm::alg
