#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalg/resolution.hpp"
#include "minors/recollement.hpp"

namespace ncm::homalg {

using alg::AlgebraPtr;
using minors::Verdict;

// gl.dim for any algebra whose top is split basic, or which is semisimple.
DimValue algebra_gldim(const AlgebraPtr& a, size_t cap);

// Projectivity of a left module; semisimple parents need no basic top.
bool module_projective(const Representation& m);
DimValue module_proj_dim(const Representation& m, size_t cap);

struct HeredityFlags {
  Mat ideal;                     // I = BeB
  bool left_projective = false;  // pre-heredity
  bool right_projective = false; // flat
  bool p_flat = false;           // Be projective as a right eBe-module
  DimValue ideal_pd;             // pd of I as a left B-module
  DimValue minor_gldim;
  bool heredity() const { return left_projective && right_projective && p_flat; }
};

HeredityFlags heredity_flags(const AlgebraPtr& b, const Vec& e, size_t cap = 12);

struct ChainStep {
  AlgebraPtr algebra;
  Vec e;
  std::string support;
  HeredityFlags flags;
};

struct HeredityChain {
  std::vector<ChainStep> steps;
  AlgebraPtr tail;  // B_{r+1}
  DimValue tail_gldim;
  size_t level() const { return steps.size(); }
};

// Depth-first over idempotent supports (smallest first, lexicographic).
std::optional<HeredityChain> heredity_chain_search(const AlgebraPtr& b, size_t cap = 12);

// Chain of heredity ideals BeB with eBe semisimple ending at 0.
bool classical_quasi_hereditary(const AlgebraPtr& b);

// Bounds attached to a chain: r(d+2) + max{gl.dim B_{r+1}, n-d-2} with d, n
// the maxima over steps, and gl.dim B_{r+1} + 2r when every step is pre-heredity.
struct ChainBound {
  size_t r = 0;
  DimValue d, n, tail_gldim, gldim;
  DimValue bound;
  std::optional<DimValue> preheredity_bound;
  bool qh_bound_holds = true;  // gl.dim <= 2r + 1
  Verdict verdict = Verdict::Pass;
};
ChainBound chain_bound(const HeredityChain& chain, const AlgebraPtr& b, size_t cap = 12);

// max{m + d + 2, n} for a single minor, asserted when Be is flat over eBe.
struct GldimBound {
  DimValue d, n, m, gldim;
  DimValue bound;
  bool hypothesis = false;
  bool inequality = false;
  bool unit_idempotent = false;  // e = 1, decided without comparing capped values
  Verdict verdict = Verdict::Pass;
};
GldimBound gldim_bound_check(const AlgebraPtr& b, const Vec& e, size_t cap = 12);

minors::Check semiorthogonality_check(const AlgebraPtr& b, const Vec& e, size_t cap = 12);

// "e1+e3" for a support given by vertex indices.
std::string support_label(const alg::BasicAlgebra& b, const std::vector<size_t>& support);

}  // namespace ncm::homalg
