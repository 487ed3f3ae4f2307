#pragma once

#include <string>
#include <vector>

#include "algebra/basic.hpp"

namespace ncm::minors {

using alg::AlgebraPtr;
using alg::Representation;
using la::Mat;
using la::Vec;
using la::operator+;
using la::operator-;
using la::operator*;

struct MinorData {
  AlgebraPtr b;
  Vec e;
  AlgebraPtr a;    // eBe
  Mat a_embed;     // A coordinates -> B coordinates
  Mat p_basis;     // Be inside B
  Mat pvee_basis;  // eB inside B
  size_t p_dim = 0;
  // Canonical map A -> End_B(Be)^op, a -> (x -> xa), on Be coordinates.
  bool end_iso = false;
  std::string end_witness;
};

// Throws NotIdempotent / ZeroIdempotent.
MinorData minor(const AlgebraPtr& b, const Vec& e, std::string name = {});

// Parses "e1+e2" against primitive idempotent labels.
Vec idempotent_from_labels(const alg::BasicAlgebra& b, const std::string& spec);

// G(M) = eM with its A-action; `basis` is the inclusion eM -> M.
struct GImage {
  Representation module;
  Mat basis;
};
GImage functor_G(const MinorData& md, const Representation& m);

// F(N) = Be (x)_A N as the cokernel of the balancing map.
struct FImage {
  Representation module;
  la::QuotientMap quotient;  // Be (x) N -> F(N)
  size_t n_dim = 0;
};
FImage functor_F(const MinorData& md, const Representation& n);
Mat functor_F_map(const MinorData& md, const FImage& src, const FImage& tgt, const Mat& f);

// H(N) = Hom_A(eB, N); each basis map is (N.dim x dim eB).
struct HImage {
  Representation module;
  std::vector<Mat> maps;
};
HImage functor_H(const MinorData& md, const Representation& n);
Mat functor_H_map(const MinorData& md, const HImage& src, const HImage& tgt, const Mat& f);

// eB as a left A-module.
Representation pvee_module(const MinorData& md);

// Unit N -> G(F(N)) and counit G(H(N)) -> N in the bases above.
Mat unit_map(const MinorData& md, const FImage& f, const GImage& gf);
Mat counit_map(const MinorData& md, const HImage& h, const GImage& gh);

// I_P = BeB as basis columns.
Mat trace_ideal(const MinorData& md);

// B/I with NotAnIdeal when the span is not a two-sided ideal.
alg::QuotientAlgebra quotient_algebra(const AlgebraPtr& b, const Mat& ideal, std::string name = {});

// Right module X (subspace of B closed under right multiplication by the
// subalgebra `sub` embedded by `embed`) as a left module over `sub_op`.
Representation right_module_as_left(const AlgebraPtr& b, const Mat& subspace, const AlgebraPtr& sub_op,
                                    const Mat& embed);

}  // namespace ncm::minors
