#pragma once

#include <string>
#include <vector>

#include "algebra/algebra.hpp"

namespace ncm::alg {

struct Arrow {
  std::string label;
  size_t source;
  size_t target;
};

// A path in written (functional) order: arrows[0] is applied last.
// Trivial paths have no arrows and sit at `vertex`.
struct Path {
  size_t vertex = 0;
  std::vector<uint32_t> arrows;

  size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

struct RelationTerm {
  Scalar coeff;
  Path path;
};
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  size_t source(const Path& p) const;
  size_t target(const Path& p) const;
  bool composable(const Path& p) const;
  std::string path_label(const Path& p) const;
  std::string vertex_idempotent_label(size_t v) const;
};

struct QuiverAlgebra {
  AlgebraPtr algebra;
  std::vector<Path> basis_paths;
  size_t certified_length = 0;
  // Coordinates of each vertex idempotent and each arrow in the algebra basis.
  std::vector<Vec> vertex_elements;
  std::vector<Vec> arrow_elements;
};

// Path algebra modulo the ideal generated by the relations. Throws
// PossiblyInfiniteDimensional when no length up to `length_cap` certifies closure.
QuiverAlgebra algebra_from_quiver(const QuiverPresentation& pres, size_t length_cap = 32, std::string name = {});

// All composable paths of length <= max_len in basis order.
std::vector<Path> enumerate_paths(const QuiverPresentation& pres, size_t max_len, size_t limit = 20000);

// Strict order used for path bases: (length, vertex for trivial paths, arrow sequence).
bool path_less(const Path& a, const Path& b);

}  // namespace ncm::alg
