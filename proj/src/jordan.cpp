#include "qmf/jordan.hpp"

#include <numeric>

namespace qmf {

RJordan class_E() {
  RJordan E = diag<Rational>(Alg::theta0, 2, 2, 2);
  const Comp<Rational> b = beta_element();
  E.x = {b, b, b};
  return E;
}

namespace {

int alg_slot(Alg a) {
  switch (a) {
    case Alg::rat: return 0;
    case Alg::gauss: return 1;
    case Alg::hurwitz: return 2;
    default: return 3;
  }
}

std::vector<RJordan> build_lattice_basis(Alg a) {
  std::vector<RJordan> out;
  for (int i = 0; i < 3; ++i) out.push_back(e_ii<Rational>(a, i));
  const RMat& B = order_basis(a);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < dim(a); ++k) {
      RJordan X(a);
      X.x[i].v = B.col(k);
      out.push_back(X);
    }
  return out;
}

}  // namespace

const std::vector<RJordan>& jordan_lattice_basis(Alg a) {
  static const std::array<std::vector<RJordan>, 4> all = {build_lattice_basis(Alg::rat), build_lattice_basis(Alg::gauss),
                                                          build_lattice_basis(Alg::hurwitz),
                                                          build_lattice_basis(Alg::theta0)};
  return all[alg_slot(a)];
}

RVec jordan_coords(const RJordan& X) {
  const int d = dim(X.alg);
  RVec t(3 + 3 * d);
  t.head(3) = X.c;
  for (int i = 0; i < 3; ++i) t.segment(3 + i * d, d) = order_coords(X.x[i]);
  return t;
}

RJordan from_jordan_coords(Alg a, const RVec& t) {
  const int d = dim(a);
  if (t.size() != 3 + 3 * d) throw std::invalid_argument("jordan coordinate length mismatch");
  RJordan X(a);
  X.c = t.head(3);
  for (int i = 0; i < 3; ++i) X.x[i] = from_order_coords(a, t.segment(3 + i * d, d));
  return X;
}

bool in_lattice(const RJordan& X) {
  const RVec t = jordan_coords(X);
  for (int i = 0; i < t.size(); ++i)
    if (!is_integer(t(i))) return false;
  return true;
}

RMat jordan_gram(Alg a) {
  const auto& B = jordan_lattice_basis(a);
  const int n = static_cast<int>(B.size());
  RMat G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = trace_pair(B[i], B[j]);
  return G;
}

namespace {

std::vector<RJordan> build_dual_basis(Alg a) {
  const auto& B = jordan_lattice_basis(a);
  const RMat Gi = exact_inverse(jordan_gram(a));
  std::vector<RJordan> out;
  for (int j = 0; j < Gi.cols(); ++j) {
    RJordan Y(a);
    for (int i = 0; i < Gi.rows(); ++i)
      if (Gi(i, j) != 0) Y = Y + Gi(i, j) * B[i];
    out.push_back(Y);
  }
  return out;
}

}  // namespace

const std::vector<RJordan>& dual_lattice_basis(Alg a) {
  static const std::array<std::vector<RJordan>, 4> all = {build_dual_basis(Alg::rat), build_dual_basis(Alg::gauss),
                                                          build_dual_basis(Alg::hurwitz),
                                                          build_dual_basis(Alg::theta0)};
  return all[alg_slot(a)];
}

RVec dual_coords(const RJordan& X) {
  const auto& B = jordan_lattice_basis(X.alg);
  RVec s(B.size());
  for (std::size_t k = 0; k < B.size(); ++k) s(k) = trace_pair(X, B[k]);
  return s;
}

bool in_dual_lattice(const RJordan& X) {
  const RVec s = dual_coords(X);
  for (int i = 0; i < s.size(); ++i)
    if (!is_integer(s(i))) return false;
  return true;
}

Integer content_jordan(const RJordan& T) {
  if (T.is_zero()) throw std::domain_error("content of zero element");
  const RVec t = jordan_coords(T);
  Integer g = 0;
  for (int i = 0; i < t.size(); ++i) {
    if (!is_integer(t(i))) throw std::domain_error("element is not in the lattice");
    g = boost::integer::gcd(g, Integer(abs(mp::numerator(t(i)))));
  }
  return g;
}

GaussMat gauss_zero() {
  GaussMat m;
  for (auto& row : m)
    for (auto& z : row) z = Comp<Rational>(Alg::gauss);
  return m;
}

GaussMat gauss_scalar(const Comp<Rational>& z) {
  GaussMat m = gauss_zero();
  for (int i = 0; i < 3; ++i) m[i][i] = project(z, Alg::gauss);
  return m;
}

namespace {

using Z = Comp<Rational>;

GaussMat hermitian(const RJordan& X) {
  const Z c1 = scalar(Alg::gauss, X.c(0)), c2 = scalar(Alg::gauss, X.c(1)),
          c3 = scalar(Alg::gauss, X.c(2));
  const Z &x1 = X.x[0], &x2 = X.x[1], &x3 = X.x[2];
  return {{{c1, x3, conj(x2)}, {conj(x3), c2, x1}, {x2, conj(x1), c3}}};
}

Z det3(const GaussMat& m) {
  auto m3 = [](const Z& a, const Z& b, const Z& c) { return mul(mul(a, b), c); };
  return m3(m[0][0], m[1][1], m[2][2]) + m3(m[0][1], m[1][2], m[2][0]) +
         m3(m[0][2], m[1][0], m[2][1]) - m3(m[0][2], m[1][1], m[2][0]) -
         m3(m[0][0], m[1][2], m[2][1]) - m3(m[0][1], m[1][0], m[2][2]);
}

GaussMat matmul(const GaussMat& a, const GaussMat& b) {
  GaussMat r = gauss_zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + mul(a[i][k], b[k][j]);
  return r;
}

GaussMat star(const GaussMat& a) {
  GaussMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = conj(a[j][i]);
  return r;
}

const std::array<Z, 3>& tits_frame() {
  static const std::array<Z, 3> v = [] {
    std::array<Z, 3> f{unit<Rational>(Alg::theta0, 2), unit<Rational>(Alg::theta0, 4),
                       -unit<Rational>(Alg::theta0, 6)};
    return f;
  }();
  return v;
}

void check_gauss(const TitsElement& t) {
  if (t.base.alg != Alg::gauss) throw algebra_mismatch("Tits base must be over gauss");
  for (const auto& row : t.tail)
    for (const auto& z : row)
      if (z.alg != Alg::gauss) throw algebra_mismatch("Tits tail must be over gauss");
}

}  // namespace

Rational tits_norm(const TitsElement& t) {
  check_gauss(t);
  const GaussMat H = hermitian(t.base);
  const Z dX = det3(H), dA = det3(t.tail);
  const GaussMat P = matmul(matmul(H, t.tail), star(t.tail));
  const Z tr = P[0][0] + P[1][1] + P[2][2];
  const Z n = dX + dA + conj(dA) - tr;
  return n.v(0);
}

RJordan tits_assemble(const TitsElement& t) {
  check_gauss(t);
  const auto& v = tits_frame();
  RJordan R(Alg::theta0);
  R.c = t.base.c;
  for (int r = 0; r < 3; ++r) {
    Z z = embed(t.base.x[r], Alg::theta0);
    for (int j = 0; j < 3; ++j) z = z + mul(v[j], embed(t.tail[r][j], Alg::theta0));
    R.x[r] = z;
  }
  return R;
}

TitsElement tits_split(const RJordan& X) {
  if (X.alg != Alg::theta0) throw algebra_mismatch("Tits split expects an element over theta0");
  const auto& v = tits_frame();
  TitsElement t;
  t.base.c = X.c;
  for (int r = 0; r < 3; ++r) {
    t.base.x[r] = project(X.x[r], Alg::gauss);
    const Z p = X.x[r] - embed(t.base.x[r], Alg::theta0);
    for (int j = 0; j < 3; ++j) t.tail[r][j] = project(mul(conj(v[j]), p), Alg::gauss);
  }
  return t;
}

}  // namespace qmf
