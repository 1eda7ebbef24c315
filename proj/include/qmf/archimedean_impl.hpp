#pragma once

// Template bodies for archimedean.hpp.

namespace qmf {

template <class Real> std::array<Real, 3> composed_intertwiner(const Real& s) {
  // Bourbaki F4: a1 = e2-e3, a2 = e3-e4 (long), a3 = e4, a4 = (e1-e2-e3-e4)/2 (short).
  static const double alpha[4][4] = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {0.5, -0.5, -0.5, -0.5}};
  static const int word[15] = {1, 2, 3, 2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1};
  // rho0 for multiplicities (long 1, short 8); lambda_s = s nu - rho0 with nu = e1 + e2.
  static const double rho0[4] = {23, 6, 5, 4}, nu[4] = {1, 1, 0, 0};
  const auto M = basis_change_matrix();
  Real A[3][3], Ai[3][3];
  {
    RMat R(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) R(i, j) = M[i][j];
    const RMat Ri = exact_inverse(R);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        A[i][j] = Real(to_double(R(i, j)));
        Ai[i][j] = Real(mp::numerator(Ri(i, j)).template convert_to<long long>()) /
                   Real(mp::denominator(Ri(i, j)).template convert_to<long long>());
      }
  }
  Real mu[4];
  for (int i = 0; i < 4; ++i) mu[i] = s * nu[i] - rho0[i];
  std::array<Real, 3> v = {Real(0), Real(0), Real(1)};  // (b^2, b^1, b^0), k = 2 - index
  auto apply = [](const Real (&m)[3][3], const std::array<Real, 3>& x) {
    std::array<Real, 3> r = {Real(0), Real(0), Real(0)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i] += m[i][j] * x[j];
    return r;
  };
  for (int p = 14; p >= 0; --p) {
    const int i = word[p] - 1;
    Real z = 0;
    for (int j = 0; j < 4; ++j) z += mu[j] * alpha[i][j];
    if (i >= 2) {
      const Real f = short_reflection_c<Real>(z);
      for (auto& t : v) t *= f;
    } else {
      std::array<Real, 3> w = i == 0 ? apply(A, v) : v;
      for (int idx = 0; idx < 3; ++idx) w[idx] *= simple_reflection_c<Real>(z, 2 - idx);
      v = i == 0 ? apply(Ai, w) : w;
    }
    const double norm2 = i < 2 ? 2.0 : 1.0;
    const Real coef = 2 * z / norm2;
    for (int j = 0; j < 4; ++j) mu[j] -= coef * alpha[i][j];
  }
  return v;
}

}  // namespace qmf
