#pragma once

#include <string>
#include <vector>

#include "algebra/basic.hpp"

namespace ncm::homalg {

using alg::BasicPtr;
using alg::Representation;
using la::Mat;
using la::Vec;
using la::operator+;
using la::operator-;
using la::operator*;

// A homological dimension, or a lower bound when the computation hit the cap.
struct DimValue {
  size_t value = 0;
  bool at_least = false;

  std::string to_string() const;
  bool operator==(const DimValue&) const = default;
};

// Direct sum of indecomposable projectives, one entry per summand.
struct ProjectiveSum {
  std::vector<size_t> vertices;
  std::vector<size_t> offsets;
  Representation module;
};

ProjectiveSum projective_sum(const BasicPtr& b, const std::vector<size_t>& vertices);

struct ProjectiveCover {
  ProjectiveSum cover;
  Mat map;  // M.dim x cover.dim, surjective
  std::vector<size_t> multiplicities;
};

ProjectiveCover projective_cover(const BasicPtr& b, const Representation& m);

// differentials[0] is the augmentation P_0 -> M; differentials[i] : P_i -> P_{i-1}.
struct ProjectiveResolution {
  Representation module;
  std::vector<ProjectiveSum> terms;
  std::vector<Mat> differentials;
  size_t length = 0;
  bool truncated = false;
};

// Computes P_0..P_cap; truncated when the syzygy after P_cap is nonzero.
ProjectiveResolution projective_resolution(const BasicPtr& b, const Representation& m, size_t cap);

// dim Ext^i(M, N) for i = 0..max_degree from a resolution computed to at
// least max_degree + 1 terms (or terminated earlier).
std::vector<size_t> ext_dims(const BasicPtr& b, const ProjectiveResolution& res, const Representation& n,
                             size_t max_degree);

size_t ext_dim(const BasicPtr& b, const Representation& m, const Representation& n, size_t i, size_t cap);

DimValue proj_dim(const BasicPtr& b, const Representation& m, size_t cap);
DimValue inj_dim(const BasicPtr& b, const Representation& m, size_t cap);
DimValue global_dim(const BasicPtr& b, size_t cap);

// Projectivity test: the projective cover is an isomorphism.
bool is_projective(const BasicPtr& b, const Representation& m);

// Maximum of two dimension values (a lower bound dominates when larger).
DimValue max_dim(const DimValue& a, const DimValue& b);

}  // namespace ncm::homalg
