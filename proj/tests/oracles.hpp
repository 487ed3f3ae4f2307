#pragma once

#include "algebra/module.hpp"
#include "algebra/quiver.hpp"

namespace oracle {

// Dimension of kQ/I counted as (paths of length <= max_len) minus the rank of
// all padded relations inside that range. Exact when every path of length
// max_len lies in the ideal and relations are homogeneous or max_len bounds
// all paths.
size_t path_algebra_dim(const ncm::alg::QuiverPresentation& q, size_t max_len);

}  // namespace oracle

namespace oracle {

// dim Ext^i_A(M, N), i = 0..max_degree, from the reduced bar complex relative
// to S = span of the given complete set of orthogonal idempotents, with
// A = S + J and J the radical (columns).
std::vector<size_t> bar_ext_dims(const ncm::alg::Algebra& a, const std::vector<ncm::la::Vec>& idempotents,
                                 const ncm::la::Mat& radical, const ncm::alg::Representation& m,
                                 const ncm::alg::Representation& n, size_t max_degree);

}  // namespace oracle
