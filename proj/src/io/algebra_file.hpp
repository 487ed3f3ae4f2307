#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/quiver.hpp"
#include "io/text.hpp"

namespace ncm::io {

struct StructureEntry {
  size_t i = 0, j = 0, k = 0;  // 1-based: b_i * b_j has coefficient `value` on b_k
  la::Scalar value;
};

// A subalgebra of the file's algebra, one labelled element per basis vector.
struct SubalgebraSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> elements;
  size_t line = 1;                  // of the section header
  std::vector<size_t> element_lines;
};

struct AlgebraFile {
  std::string name;
  bool is_quiver = false;
  alg::QuiverPresentation quiver;
  size_t dim = 0;
  std::vector<std::string> labels;
  std::optional<la::Vec> unit;
  std::vector<StructureEntry> entries;  // sorted by (i, j, k)
  std::optional<SubalgebraSpec> subalgebra;
  size_t body_line = 1;  // header of [quiver] or [structure_constants]
};

AlgebraFile parse_algebra_file(std::string_view text, const std::string& file);
std::string emit_algebra_file(const AlgebraFile& f);

// Structure-constant description of an algebra.
AlgebraFile algebra_to_file(const alg::Algebra& a);

struct LoadedAlgebra {
  alg::AlgebraPtr algebra;
  std::optional<alg::QuiverAlgebra> quiver;
  alg::AlgebraPtr subalgebra;
  la::Mat inclusion;  // subalgebra coordinates -> algebra coordinates
};

// Builds the algebra; validation failures come back as ParseError naming
// the file.
LoadedAlgebra build_algebra(const AlgebraFile& f, const std::string& file);
LoadedAlgebra load_algebra(const std::string& path);

}  // namespace ncm::io
