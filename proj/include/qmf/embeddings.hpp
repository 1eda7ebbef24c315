#pragma once

#include "qmf/freudenthal.hpp"

#include <array>

namespace qmf {

// W_{J_B} + W6 (x) B  ->  W_{J_Theta}.  The tail lives in the l-halves of the
// off-diagonal entries: slot i of b (resp. c) gains tail_b[i] * l (resp.
// tail_c[i] * l), where (0, q) = q l in the doubling Theta = B + B l.
struct CDSplit {
  RFreud base{Alg::hurwitz};
  std::array<Comp<Rational>, 3> tail_b{Comp<Rational>(Alg::hurwitz), Comp<Rational>(Alg::hurwitz),
                                       Comp<Rational>(Alg::hurwitz)};
  std::array<Comp<Rational>, 3> tail_c = tail_b;
};

RFreud cd_embed(const CDSplit& e);
CDSplit cd_split(const RFreud& w);
// Symplectic form restricted to the tails: sum_i -(ub_i, uc'_i) + (uc_i, ub'_i)
// with (x, y) = tr(x conj y).
Rational cd_tail_symp(const CDSplit& e, const CDSplit& f);

// W_{J_K} + B^2 -> W_J with B = M3(K): b = (b_K, eta1), c = (c_K, eta2) pushed
// through tits_assemble.
struct TitsSplit {
  RFreud base{Alg::gauss};
  GaussMat eta1 = gauss_zero(), eta2 = gauss_zero();
};

RFreud tits_embed(const TitsSplit& e);
TitsSplit tits_split_w(const RFreud& w);

// The rank-one element over K = Q(i), kappa = 2i: omega = (0, 1, 0, kappa^2/4)
// and eta = (1_3, -(kappa/2) 1_3).
TitsSplit distinguished_witness();

}  // namespace qmf
