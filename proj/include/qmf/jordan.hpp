#pragma once

#include "qmf/composition.hpp"

#include <array>
#include <vector>

namespace qmf {

// Hermitian 3x3 matrix over a composition algebra,
//   [[c1, x3, conj(x2)], [conj(x3), c2, x1], [x2, conj(x1), c3]].
template <class S> struct Jordan {
  Alg alg = Alg::theta0;
  Eigen::Matrix<S, 3, 1> c = Eigen::Matrix<S, 3, 1>::Zero();
  std::array<Comp<S>, 3> x{Comp<S>(Alg::theta0), Comp<S>(Alg::theta0), Comp<S>(Alg::theta0)};

  Jordan() = default;
  explicit Jordan(Alg a) : alg(a), x{Comp<S>(a), Comp<S>(a), Comp<S>(a)} {}

  bool operator==(const Jordan& o) const {
    return alg == o.alg && c == o.c && x[0] == o.x[0] && x[1] == o.x[1] && x[2] == o.x[2];
  }
  bool is_zero() const { return c.isZero() && x[0].is_zero() && x[1].is_zero() && x[2].is_zero(); }
};

template <class S> Jordan<S> operator+(const Jordan<S>& X, const Jordan<S>& Y) {
  check_same(X.alg, Y.alg);
  Jordan<S> R(X.alg);
  R.c = X.c + Y.c;
  for (int i = 0; i < 3; ++i) R.x[i] = X.x[i] + Y.x[i];
  return R;
}
template <class S> Jordan<S> operator-(const Jordan<S>& X, const Jordan<S>& Y) {
  check_same(X.alg, Y.alg);
  Jordan<S> R(X.alg);
  R.c = X.c - Y.c;
  for (int i = 0; i < 3; ++i) R.x[i] = X.x[i] - Y.x[i];
  return R;
}
template <class S> Jordan<S> operator-(const Jordan<S>& X) {
  Jordan<S> R(X.alg);
  R.c = -X.c;
  for (int i = 0; i < 3; ++i) R.x[i] = -X.x[i];
  return R;
}
template <class S> Jordan<S> operator*(const S& s, const Jordan<S>& X) {
  Jordan<S> R(X.alg);
  R.c = s * X.c;
  for (int i = 0; i < 3; ++i) R.x[i] = s * X.x[i];
  return R;
}

template <class S> Jordan<S> diag(Alg a, const S& c1, const S& c2, const S& c3) {
  Jordan<S> R(a);
  R.c << c1, c2, c3;
  return R;
}
template <class S> Jordan<S> identity(Alg a) { return diag<S>(a, S(1), S(1), S(1)); }
template <class S> Jordan<S> e_ii(Alg a, int i) {
  Jordan<S> R(a);
  R.c(i) = S(1);
  return R;
}

template <class S> S cubic_norm(const Jordan<S>& X) {
  const auto& [c1, c2, c3] = std::tie(X.c(0), X.c(1), X.c(2));
  return c1 * c2 * c3 - c1 * norm(X.x[0]) - c2 * norm(X.x[1]) - c3 * norm(X.x[2]) +
         trace(mul(mul(X.x[0], X.x[1]), X.x[2]));
}

// X# with (X#)_ii = c_j c_k - n(x_i) and (X#)_i = conj(x_j x_k) - c_i x_i.
template <class S> Jordan<S> adjoint(const Jordan<S>& X) {
  Jordan<S> R(X.alg);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    R.c(i) = X.c(j) * X.c(k) - norm(X.x[i]);
    R.x[i] = conj(mul(X.x[j], X.x[k])) - X.c(i) * X.x[i];
  }
  return R;
}

template <class S> S trace_pair(const Jordan<S>& X, const Jordan<S>& Y) {
  check_same(X.alg, Y.alg);
  S s = X.c.dot(Y.c);
  for (int i = 0; i < 3; ++i) s += trace_form(X.x[i], Y.x[i]);
  return s;
}

template <class S> Jordan<S> cross(const Jordan<S>& X, const Jordan<S>& Y) {
  return adjoint(X + Y) - adjoint(X) - adjoint(Y);
}

template <class S> int rank_jordan(const Jordan<S>& X) {
  if (X.is_zero()) return 0;
  if (adjoint(X).is_zero()) return 1;
  if (cubic_norm(X) == S(0)) return 2;
  return 3;
}

// Elementary symmetric functions of the real spectrum: s1 = (X,1), s2 = (X#,1), s3 = N(X).
template <class S> bool is_psd(const Jordan<S>& X) {
  const S s1 = X.c.sum();
  const S s2 = adjoint(X).c.sum();
  return s1 >= S(0) && s2 >= S(0) && cubic_norm(X) >= S(0);
}
template <class S> bool is_positive_definite(const Jordan<S>& X) {
  return X.c.sum() > S(0) && adjoint(X).c.sum() > S(0) && cubic_norm(X) > S(0);
}

template <class T, class S> Jordan<T> cast(const Jordan<S>& X) {
  Jordan<T> R(X.alg);
  R.c = X.c.template cast<T>();
  for (int i = 0; i < 3; ++i) R.x[i] = cast<T>(X.x[i]);
  return R;
}

template <class S> Jordan<S> embed(const Jordan<S>& X, Alg target) {
  Jordan<S> R(target);
  R.c = X.c;
  for (int i = 0; i < 3; ++i) R.x[i] = embed(X.x[i], target);
  return R;
}
template <class S> Jordan<S> project(const Jordan<S>& X, Alg target) {
  Jordan<S> R(target);
  R.c = X.c;
  for (int i = 0; i < 3; ++i) R.x[i] = project(X.x[i], target);
  return R;
}

using RJordan = Jordan<Rational>;

// E = [[2, b, conj b], [conj b, 2, b], [b, conj b, 2]] with b = beta.
RJordan class_E();

// Z-basis of J0 = H3(order): e11, e22, e33, then the order basis in slots 1, 2, 3.
const std::vector<RJordan>& jordan_lattice_basis(Alg a);
RVec jordan_coords(const RJordan& X);  // coordinates in jordan_lattice_basis
RJordan from_jordan_coords(Alg a, const RVec& t);
bool in_lattice(const RJordan& X);
// Z-basis of the dual lattice {Y : (Y, J0) in Z} from the inverse Gram matrix.
const std::vector<RJordan>& dual_lattice_basis(Alg a);
RVec dual_coords(const RJordan& X);
bool in_dual_lattice(const RJordan& X);
RMat jordan_gram(Alg a);

// Largest d with T in d*J0.  Throws on zero or non-lattice input.
Integer content_jordan(const RJordan& T);

// Second Tits construction with lambda = 1, S = 1_3: J = H3(K) + M3(K),
// K = Q(e1).  Norm N(X, a) = det X + det a + conj(det a) - tr(X a a*).
using GaussMat = std::array<std::array<Comp<Rational>, 3>, 3>;
GaussMat gauss_zero();
GaussMat gauss_scalar(const Comp<Rational>& z);
struct TitsElement {
  RJordan base{Alg::gauss};
  GaussMat tail = gauss_zero();
};
Rational tits_norm(const TitsElement& t);
// Row r of the tail fills the K-orthogonal part of off-diagonal slot r:
//   x_r = base.x_r + sum_j v_j * tail(r, j),  v = (e2, e4, -e6).
RJordan tits_assemble(const TitsElement& t);
TitsElement tits_split(const RJordan& X);

}  // namespace qmf
