#pragma once

#include "qmf/enumeration.hpp"

#include <array>
#include <vector>

namespace qmf {

// sigma_4(content) on rank-one w, 0 on higher rank.  w over H3(theta0).
Integer a_theta(const RFreud& w);

// Coefficient of q^T in 1/240 + sum_{T >= 0 rank one} sigma_3(content(T)) q^T.
Rational kim_coeff(const RJordan& T);

struct CoeffResult {
  Integer value = 0;
  bool complete = true;
  std::vector<RFreud> witnesses;  // contributing elements
};

// sum over Omega_I(w0) of sigma_4 minus the same over Omega_E(w0).
CoeffResult fdelta_coeff(const std::array<Rational, 4>& w0, std::int64_t height = 0);
// Sum of a_theta over integral rank-one lifts of x; x over H3(hurwitz)
// (E7 pullback) or H3(gauss) (E6 pullback via the Tits frame).
CoeffResult e7_pullback_coeff(const RFreud& x, std::int64_t height);
CoeffResult e6_pullback_coeff(const RFreud& w, std::int64_t height);

struct KimTheta {
  int n = 0;
  Rational sum_I, sum_E, lhs, rhs, weighted, weighted_expected;
  bool ok = false;
};
// sum_K(n) = sum over rank-one T >= 0 with (T, K) = n of sigma_3(content).
// lhs = sum_I - sum_E is the epsilon-weighted combination; rhs = 3 tau(n).
KimTheta kim_theta_identity(int n);

}  // namespace qmf
