#pragma once

#include "qmf/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmf {

// The four composition algebras live inside one octonion algebra: coordinates
// are always 8 long, with a subalgebra using only its first dim() slots.
//   rat     = Q          basis 1
//   gauss   = Q(e1)      basis 1, e1
//   hurwitz = Q<e1,e2>   basis 1, e1, e2, e3 (Hamilton quaternions)
//   theta0  = octonions  Cayley-Dickson double of hurwitz, gamma = -1,
//             e_{4+k} = e_k * l with l = e4
enum class Alg : int { rat = 1, gauss = 2, hurwitz = 4, theta0 = 8 };

inline int dim(Alg a) { return static_cast<int>(a); }
std::string_view alg_name(Alg a);
Alg parse_alg(std::string_view s);

struct algebra_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S> using Vec8 = Eigen::Matrix<S, 8, 1>;
template <class S> using Vec4 = Eigen::Matrix<S, 4, 1>;

template <class S> struct Comp {
  Alg alg = Alg::theta0;
  Vec8<S> v = Vec8<S>::Zero();

  Comp() = default;
  explicit Comp(Alg a) : alg(a) {}
  Comp(Alg a, const Vec8<S>& c) : alg(a), v(c) {}

  bool operator==(const Comp& o) const { return alg == o.alg && v == o.v; }
  bool is_zero() const { return v.isZero(); }
};

template <class S> Vec4<S> qmul(const Vec4<S>& a, const Vec4<S>& b) {
  Vec4<S> r;
  r(0) = a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
  r(1) = a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2);
  r(2) = a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1);
  r(3) = a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0);
  return r;
}

template <class S> Vec4<S> qconj(const Vec4<S>& a) {
  Vec4<S> r = -a;
  r(0) = a(0);
  return r;
}

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
template <class S> Vec8<S> omul(const Vec8<S>& x, const Vec8<S>& y) {
  const Vec4<S> a = x.template head<4>(), b = x.template tail<4>();
  const Vec4<S> c = y.template head<4>(), d = y.template tail<4>();
  Vec8<S> r;
  r.template head<4>() = qmul(a, c) - qmul(qconj(d), b);
  r.template tail<4>() = qmul(d, a) + qmul(b, qconj(c));
  return r;
}

template <class S> Vec8<S> oconj(const Vec8<S>& x) {
  Vec8<S> r = -x;
  r(0) = x(0);
  return r;
}

inline void check_same(Alg a, Alg b) {
  if (a != b) throw algebra_mismatch("composition elements from different algebras");
}

// Products stay in the subalgebra, so only its leading coordinates are touched.
template <class S> Comp<S> mul(const Comp<S>& x, const Comp<S>& y) {
  check_same(x.alg, y.alg);
  Comp<S> r(x.alg);
  switch (x.alg) {
    case Alg::rat:
      r.v(0) = x.v(0) * y.v(0);
      break;
    case Alg::gauss:
      r.v(0) = x.v(0) * y.v(0) - x.v(1) * y.v(1);
      r.v(1) = x.v(0) * y.v(1) + x.v(1) * y.v(0);
      break;
    case Alg::hurwitz:
      r.v.template head<4>() = qmul<S>(x.v.template head<4>(), y.v.template head<4>());
      break;
    default:
      r.v = omul(x.v, y.v);
  }
  return r;
}
template <class S> Comp<S> conj(const Comp<S>& x) { return {x.alg, oconj(x.v)}; }
template <class S> S norm(const Comp<S>& x) { return x.v.head(dim(x.alg)).squaredNorm(); }
template <class S> S trace(const Comp<S>& x) { return S(2) * x.v(0); }
// tr(x conj(y)), the bilinear form polarizing the norm
template <class S> S trace_form(const Comp<S>& x, const Comp<S>& y) {
  check_same(x.alg, y.alg);
  return S(2) * x.v.head(dim(x.alg)).dot(y.v.head(dim(x.alg)));
}

template <class S> Comp<S> operator+(const Comp<S>& x, const Comp<S>& y) {
  check_same(x.alg, y.alg);
  return {x.alg, x.v + y.v};
}
template <class S> Comp<S> operator-(const Comp<S>& x, const Comp<S>& y) {
  check_same(x.alg, y.alg);
  return {x.alg, x.v - y.v};
}
template <class S> Comp<S> operator-(const Comp<S>& x) { return {x.alg, -x.v}; }
template <class S> Comp<S> operator*(const S& s, const Comp<S>& x) { return {x.alg, s * x.v}; }

template <class S> Comp<S> unit(Alg a, int i) {
  if (i < 0 || i >= dim(a)) throw std::out_of_range("basis index outside algebra");
  Comp<S> r(a);
  r.v(i) = S(1);
  return r;
}
template <class S> Comp<S> one(Alg a) { return unit<S>(a, 0); }
template <class S> Comp<S> scalar(Alg a, const S& s) {
  Comp<S> r(a);
  r.v(0) = s;
  return r;
}

// Reinterpret in a larger algebra, or orthogonally project to a smaller one.
template <class S> Comp<S> embed(const Comp<S>& x, Alg target) {
  if (dim(target) < dim(x.alg)) throw algebra_mismatch("embed into smaller algebra");
  return {target, x.v};
}
template <class S> Comp<S> project(const Comp<S>& x, Alg target) {
  Comp<S> r(target);
  r.v.head(dim(target)) = x.v.head(dim(target));
  return r;
}

template <class T, class S> Comp<T> cast(const Comp<S>& x) {
  return {x.alg, x.v.template cast<T>()};
}

// beta = (-1 + e1 + ... + e7)/2
Comp<Rational> beta_element();

// Maximal orders.  Columns are the documented Z-basis in standard coordinates.
// theta0 basis:
//   1, e1, e2, (1+e1+e2+e3)/2, e4, (1+e1+e4+e5)/2, (e1+e2+e4+e6)/2,
//   (1+e2+e4+e7)/2
// The Hurwitz order is theta0 cut with the quaternions; Z[e1] and Z below it.
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exact Gauss-Jordan; Eigen's LU does not instantiate for the rational scalar.
RMat exact_inverse(const RMat& A);
Rational exact_det(const RMat& A);

const RMat& order_basis(Alg a);      // 8 x dim
const RMat& order_basis_inv(Alg a);  // dim x dim, inverse of the leading block
RVec order_coords(const Comp<Rational>& x);
Comp<Rational> from_order_coords(Alg a, const RVec& t);
bool order_contains(const Comp<Rational>& x);
// Gram matrix of the order under tr(x conj(y)).
RMat order_gram(Alg a);
// Discriminant of the order: determinant of order_gram.
Rational order_discriminant(Alg a);

// All order elements of norm m, sorted lexicographically by order coordinates.
std::vector<Comp<Rational>> enumerate_norm(Alg a, std::int64_t m);

}  // namespace qmf
