#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ncm::hcurve {

// H(n) inside Mat(n, O) for a complete DVR O with uniformizer t: block
// (i, j) has entries in tO when j > i. Encoded by its exponent pattern.
struct LocalOrder {
  std::vector<size_t> composition;
  size_t n = 0;

  size_t blocks() const { return composition.size(); }
  size_t block_of(size_t coord) const;
  // Minimal valuation of entry (r, c).
  long pattern(size_t r, size_t c) const;
  // Valuation matrix, row-major n x n; nullopt stands for a zero entry.
  bool contains(const std::vector<std::optional<long>>& valuations) const;
};

// Throws EmptyComposition; zero parts are InvalidInput.
LocalOrder local_order(const std::vector<size_t>& composition);

// Row lattice: coordinate c lies in t^{valuation[c]} O.
struct Lattice {
  size_t index = 0;
  std::vector<long> valuation;
};

struct LocalSimple {
  size_t index = 0;  // U_i = L_i / L_{i+1}
  size_t dim = 0;
  size_t block = 0;  // the block on which L_i and L_{i+1} differ
  bool simple = false;
  bool projective_resolution = false;  // both lattices stable, L_{i+1} inside L_i
  bool split = true;
  size_t pd = 0;
};

struct LocalStructure {
  LocalOrder order;
  std::vector<Lattice> lattices;  // L_0, ..., L_k = t L_0
  std::vector<LocalSimple> simples;
  bool periodic = false;          // L_k = t L_0
  size_t gldim = 0;
};

// L_i has the last i blocks in tO: L_0 = O^n, L_1 = O^{n-n_k} + (tO)^{n_k}, ...
bool lattice_stable(const LocalOrder& h, const std::vector<long>& valuation);
LocalStructure local_projectives_and_simples(const LocalOrder& h);

// Lexicographically least rotation.
std::vector<size_t> morita_canonical_form(const std::vector<size_t>& composition);

std::string composition_string(const std::vector<size_t>& composition);

}  // namespace ncm::hcurve
