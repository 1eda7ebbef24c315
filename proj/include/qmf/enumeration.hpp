#pragma once

#include "qmf/freudenthal.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace qmf {

struct JordanEnum {
  std::vector<RJordan> elements;  // sorted by jordan_coords; empty unless kept
  std::uint64_t count = 0;
  Integer aggregate = 0;  // sum of sigma_3(content)
  std::map<std::int64_t, std::uint64_t> by_content;
  bool complete = true;
};

// All T in J0 = H3(theta0) of rank one, T >= 0, with (T, K) = n.  K must be
// positive definite and lie in J0.
JordanEnum enum_rank1_psd_pairing(const RJordan& K, std::int64_t n, bool keep_elements = true);

struct WEnum {
  std::vector<RFreud> elements;  // sorted by w_coords
  Integer aggregate = 0;         // sum of sigma_4(content)
  bool complete = true;
  std::uint64_t excluded = 0;    // elements found but dropped by the height bound
};

// Contractions of w in W_{J_Theta} against K: (a, (b, K#)/3, (c, K)/3, d).
std::array<Rational, 4> contract(const RFreud& w, const RJordan& K);

// Omega_K(w0): rank-one integral w over H3(theta0) with contract(w, K) = w0.
// height > 0 drops elements whose w_coords exceed it (complete turns false).
// work_limit caps the number of candidate pairs in the a = d = 0 branch.
WEnum omega_fiber(const RJordan& K, const std::array<Rational, 4>& w0, std::int64_t height = 0,
                  std::uint64_t work_limit = 50'000'000);

// Rank-one integral Omega over H3(theta0) whose entrywise orthogonal
// projection onto the subalgebra x.alg() equals x.  height > 0 bounds the
// sup-norm of the tail coordinates (those outside x.alg()).
WEnum rank1_lifts(const RFreud& x, std::int64_t height = 0);

// All rank-one integral w over H3(alg) with sup-norm of w_coords <= height.
WEnum rank1_sweep(Alg alg, std::int64_t height);

// Integral octonions z with n(z) = m whose projection onto sub equals k,
// as doubled coordinates sorted lexicographically.
std::vector<std::array<std::int64_t, 8>> coset_shell(Alg sub, const Comp<Rational>& k, std::int64_t m);

}  // namespace qmf
