#pragma once

#include "qmf/jordan.hpp"

#include <vector>

namespace qmf {

// w = (a, b, c, d) in W_J = Q + J + J^v + Q, with J^v identified with J
// through the trace pairing.
template <class S> struct Freud {
  S a = S(0);
  Jordan<S> b, c;
  S d = S(0);

  Freud() = default;
  explicit Freud(Alg alg) : b(alg), c(alg) {}
  Freud(const S& a_, const Jordan<S>& b_, const Jordan<S>& c_, const S& d_)
      : a(a_), b(b_), c(c_), d(d_) {
    check_same(b.alg, c.alg);
  }

  Alg alg() const { return b.alg; }
  bool operator==(const Freud& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool is_zero() const { return a == S(0) && d == S(0) && b.is_zero() && c.is_zero(); }
};

template <class S> Freud<S> operator+(const Freud<S>& w, const Freud<S>& v) {
  return {w.a + v.a, w.b + v.b, w.c + v.c, w.d + v.d};
}
template <class S> Freud<S> operator-(const Freud<S>& w, const Freud<S>& v) {
  return {w.a - v.a, w.b - v.b, w.c - v.c, w.d - v.d};
}
template <class S> Freud<S> operator*(const S& s, const Freud<S>& w) {
  return {s * w.a, s * w.b, s * w.c, s * w.d};
}

// <w, w'> = a d' - (b, c') + (c, b') - d a'
template <class S> S symp(const Freud<S>& w, const Freud<S>& v) {
  return w.a * v.d - trace_pair(w.b, v.c) + trace_pair(w.c, v.b) - w.d * v.a;
}

// q(w) = (ad - (b,c))^2 + 4aN(c) + 4dN(b) - 4(b#, c#); q((0, 1, 0, mu)) = 4 mu.
template <class S> S quartic(const Freud<S>& w) {
  const S delta = w.a * w.d - trace_pair(w.b, w.c);
  return delta * delta + S(4) * w.a * cubic_norm(w.c) + S(4) * w.d * cubic_norm(w.b) -
         S(4) * trace_pair(adjoint(w.b), adjoint(w.c));
}

// Self-evaluation of the trilinear form attached to q, scaled so that
// <wflat(w), w> = 2 q(w).  With delta = ad - (b,c):
//   (delta a + 2N(b), delta b - 2a c# + 2 c x b#,
//    -delta c + 2d b# - 2 b x c#, -(delta d + 2N(c)))
template <class S> Freud<S> wflat(const Freud<S>& w) {
  const S delta = w.a * w.d - trace_pair(w.b, w.c);
  const Jordan<S> bs = adjoint(w.b), cs = adjoint(w.c);
  return {delta * w.a + S(2) * cubic_norm(w.b),
          delta * w.b - (S(2) * w.a) * cs + S(2) * cross(w.c, bs),
          (S(2) * w.d) * bs - delta * w.c - S(2) * cross(w.b, cs),
          -(delta * w.d + S(2) * cubic_norm(w.c))};
}

template <class S> bool rank_le1(const Freud<S>& w) {
  return adjoint(w.b) == w.a * w.c && adjoint(w.c) == w.d * w.b &&
         trace_pair(w.b, w.c) == S(3) * w.a * w.d;
}

template <class S> int rank_w(const Freud<S>& w) {
  if (w.is_zero()) return 0;
  if (rank_le1(w)) return 1;
  if (wflat(w).is_zero()) return 2;
  if (quartic(w) == S(0)) return 3;
  return 4;
}

// (a, b, c, d) -> (d, c, b, a); preserves each rank stratum.
template <class S> Freud<S> flip(const Freud<S>& w) { return {w.d, w.c, w.b, w.a}; }

// t = (lambda, t1, t2, t3), delta = t1 t2 t3, t.X = diag(t) X diag(t).
template <class S> struct Torus {
  S lambda = S(1);
  Eigen::Matrix<S, 3, 1> t = Eigen::Matrix<S, 3, 1>::Ones();
  S delta() const { return t(0) * t(1) * t(2); }
};

template <class S> Jordan<S> torus_conj(const Eigen::Matrix<S, 3, 1>& t, const Jordan<S>& X) {
  Jordan<S> R(X.alg);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    R.c(i) = t(i) * t(i) * X.c(i);
    R.x[i] = (t(j) * t(k)) * X.x[i];
  }
  return R;
}

// (l^-1 d^-1 a, d^-1 (t.b), l d (t^-1.c), l^2 d d)
template <class S> Freud<S> torus_act(const Torus<S>& g, const Freud<S>& w) {
  for (int i = 0; i < 3; ++i)
    if (g.t(i) == S(0)) throw std::domain_error("torus entries must be nonzero");
  if (g.lambda == S(0)) throw std::domain_error("torus entries must be nonzero");
  const S dl = g.delta();
  const Eigen::Matrix<S, 3, 1> ti = g.t.cwiseInverse();
  return {w.a / (g.lambda * dl), (S(1) / dl) * torus_conj(g.t, w.b),
          (g.lambda * dl) * torus_conj(ti, w.c), g.lambda * g.lambda * dl * w.d};
}

template <class T, class S> Freud<T> cast(const Freud<S>& w) {
  return {T(w.a), cast<T>(w.b), cast<T>(w.c), T(w.d)};
}

using RFreud = Freud<Rational>;

// Coordinates in the Z-basis of W_J(Z) = Z + J0 + J0^v + Z, ordered
// (a, jordan_coords(b), dual_coords(c), d).
RVec w_coords(const RFreud& w);
bool is_integral(const RFreud& w);
Integer content_w(const RFreud& w);
// Sup-norm of w_coords rounded up.
Integer height_w(const RFreud& w);

}  // namespace qmf
