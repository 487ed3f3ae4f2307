#include "algebra/basic.hpp"

namespace ncm::alg {

std::optional<size_t> BasicAlgebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < idempotents.labels.size(); ++i)
    if (idempotents.labels[i] == label) return i;
  return std::nullopt;
}

Mat BasicAlgebra::right_projective_basis(size_t i) const {
  std::vector<Vec> cols;
  const Vec& e = idempotents.elements[i];
  for (size_t j = 0; j < algebra->dim(); ++j) cols.push_back(algebra->multiply(e, algebra->basis_vector(j)));
  return la::column_space_basis(Mat::from_columns(cols, algebra->dim()));
}

Representation BasicAlgebra::injective(size_t i) const {
  return dual_of_right_ideal(algebra, right_projective_basis(i));
}

Representation BasicAlgebra::top_module() const { return direct_sum(algebra, simples); }

BasicPtr make_basic(const AlgebraPtr& a) {
  auto b = std::make_shared<BasicAlgebra>();
  b->algebra = a;
  b->radical = radical(a);
  b->idempotents = primitive_idempotents(a);
  const Representation reg = regular_module(a);
  for (const Vec& e : b->idempotents.elements) {
    std::vector<Vec> cols;
    for (size_t j = 0; j < a->dim(); ++j) cols.push_back(a->multiply(a->basis_vector(j), e));
    Mat basis = la::column_space_basis(Mat::from_columns(cols, a->dim()));
    Representation p = submodule(reg, basis);
    Mat rad_p = radical_submodule(p, b->radical);
    QuotientModule s = quotient_module(p, rad_p);
    if (s.module.dim != 1) throw Error(ErrorKind::NonBasicTop, "simple quotient is not one-dimensional");
    b->projective_bases.push_back(std::move(basis));
    b->projectives.push_back(std::move(p));
    b->simples.push_back(std::move(s.module));
  }
  return b;
}

}  // namespace ncm::alg
