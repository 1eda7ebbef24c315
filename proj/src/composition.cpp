#include "qmf/composition.hpp"
#include "qmf/kernel.hpp"
#include "qmf/lattice.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>

namespace qmf {

Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view t) {
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    return t;
  };
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto int_of = [](std::string_view t) {
    if (t.empty() || t == "-" || t == "+") throw std::invalid_argument("bad rational");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational: " + std::string(t));
    return Integer(std::string(t[0] == '+' ? t.substr(1) : t));
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(int_of(s));
  const Integer den = int_of(trim(s.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(int_of(trim(s.substr(0, slash)))) / Rational(den);
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::overflow_error("not an integer: " + to_string(q));
  const Integer n = mp::numerator(q);
  if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN)) throw std::overflow_error("integer overflow");
  return n.convert_to<std::int64_t>();
}

std::string_view alg_name(Alg a) {
  switch (a) {
    case Alg::rat: return "rat";
    case Alg::gauss: return "gauss";
    case Alg::hurwitz: return "hurwitz";
    case Alg::theta0: return "theta0";
  }
  return "?";
}

Alg parse_alg(std::string_view s) {
  for (Alg a : {Alg::rat, Alg::gauss, Alg::hurwitz, Alg::theta0})
    if (alg_name(a) == s) return a;
  throw std::invalid_argument("unknown algebra: " + std::string(s));
}

Comp<Rational> beta_element() {
  Comp<Rational> b(Alg::theta0);
  b.v.setConstant(Rational(1, 2));
  b.v(0) = Rational(-1, 2);
  return b;
}

RMat exact_inverse(const RMat& A) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  RMat M = A, R = RMat::Identity(n, n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && M(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    M.row(c).swap(M.row(p));
    R.row(c).swap(R.row(p));
    const Rational inv = Rational(1) / M(c, c);
    M.row(c) *= inv;
    R.row(c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || M(r, c) == 0) continue;
      const Rational f = M(r, c);
      M.row(r) -= f * M.row(c);
      R.row(r) -= f * R.row(c);
    }
  }
  return R;
}

Rational exact_det(const RMat& A) {
  const int n = static_cast<int>(A.rows());
  RMat M = A;
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && M(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      M.row(c).swap(M.row(p));
      det = -det;
    }
    det *= M(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (M(r, c) == 0) continue;
      const Rational f = M(r, c) / M(c, c);
      M.row(r) -= f * M.row(c);
    }
  }
  return det;
}

namespace {

struct OrderData {
  RMat basis, inv;
};

OrderData build(Alg a) {
  static const int theta[8][8] = {
      {2, 0, 0, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0, 0, 0},
      {1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0},
      {0, 1, 1, 0, 1, 0, 1, 0}, {1, 0, 1, 0, 1, 0, 0, 1}};
  const int d = dim(a);
  OrderData o;
  o.basis = RMat::Zero(8, d);
  if (a == Alg::hurwitz) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 8; ++j) o.basis(j, i) = Rational(theta[i][j], 2);
  } else if (a == Alg::theta0) {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) o.basis(j, i) = Rational(theta[i][j], 2);
  } else {
    for (int i = 0; i < d; ++i) o.basis(i, i) = 1;
  }
  o.inv = exact_inverse(o.basis.topRows(d));
  return o;
}

const OrderData& data(Alg a) {
  static const std::array<OrderData, 4> all = {build(Alg::rat), build(Alg::gauss),
                                               build(Alg::hurwitz), build(Alg::theta0)};
  switch (a) {
    case Alg::rat: return all[0];
    case Alg::gauss: return all[1];
    case Alg::hurwitz: return all[2];
    default: return all[3];
  }
}

}  // namespace

const RMat& order_basis(Alg a) { return data(a).basis; }
const RMat& order_basis_inv(Alg a) { return data(a).inv; }

RVec order_coords(const Comp<Rational>& x) {
  const int d = dim(x.alg);
  for (int i = d; i < 8; ++i)
    if (x.v(i) != 0) throw algebra_mismatch("coordinates outside the algebra");
  return order_basis_inv(x.alg) * x.v.head(d);
}

Comp<Rational> from_order_coords(Alg a, const RVec& t) {
  if (t.size() != dim(a)) throw std::invalid_argument("order coordinate length mismatch");
  return {a, order_basis(a) * t};
}

bool order_contains(const Comp<Rational>& x) {
  const RVec t = order_coords(x);
  for (int i = 0; i < t.size(); ++i)
    if (!is_integer(t(i))) return false;
  return true;
}

RMat order_gram(Alg a) {
  const RMat& B = order_basis(a);
  return Rational(2) * B.transpose() * B;
}

Rational order_discriminant(Alg a) {
  const RMat G = order_gram(a);
  return exact_det(G);
}

std::vector<Comp<Rational>> enumerate_norm(Alg a, std::int64_t m) {
  if (m < 0) return {};
  const int d = dim(a);
  const RMat G = order_gram(a);
  Eigen::MatrixXd Gd(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Gd(i, j) = to_double(G(i, j)) / 2.0;  // n(x) = t^T (G/2) t
  // Doubled standard coordinates 2x = B2 t are integral, and 4 n(x) = |B2 t|^2.
  Eigen::Matrix<std::int64_t, 8, Eigen::Dynamic> B2(8, d);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < d; ++j) B2(i, j) = to_int64(Rational(2) * order_basis(a)(i, j));
  std::vector<std::vector<std::int64_t>> hits;
  enumerate_ellipsoid(Gd, Eigen::VectorXd::Zero(d), double(m), [&](const std::int64_t* t) {
    std::int64_t n4 = 0;
    for (int i = 0; i < 8; ++i) {
      std::int64_t x = 0;
      for (int j = 0; j < d; ++j) x += B2(i, j) * t[j];
      n4 += x * x;
    }
    if (n4 == 4 * m) hits.emplace_back(t, t + d);
    return true;
  });
  std::sort(hits.begin(), hits.end());
  std::vector<Comp<Rational>> out;
  out.reserve(hits.size());
  for (const auto& h : hits) {
    Comp<Rational> x(a);
    for (int i = 0; i < 8; ++i) {
      std::int64_t v = 0;
      for (int j = 0; j < d; ++j) v += B2(i, j) * h[j];
      x.v(i) = Rational(v) / 2;
    }
    out.push_back(std::move(x));
  }
  return out;
}

namespace kern {

HOct from_comp(const Comp<Rational>& x) {
  HOct r;
  for (int i = 0; i < 8; ++i) r[i] = to_int64(Rational(2) * x.v(i));
  return r;
}

Comp<Rational> to_comp(const HOct& x, Alg a) {
  Comp<Rational> r(a);
  for (int i = 0; i < 8; ++i) r.v(i) = Rational(x[i], 2);
  for (int i = dim(a); i < 8; ++i)
    if (x[i] != 0) throw algebra_mismatch("coordinates outside the algebra");
  return r;
}

namespace {
struct IntInv {
  std::int64_t m[8][8];
  std::int64_t den;
};
const IntInv& int_inv() {
  static const IntInv inv = [] {
    IntInv r{};
    const RMat& B = order_basis_inv(Alg::theta0);
    Integer l = 1;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) l = boost::integer::lcm(l, Integer(mp::denominator(B(i, j))));
    // t = B^{-1} x = B^{-1} D / 2
    r.den = 2 * l.convert_to<std::int64_t>();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.m[i][j] = to_int64(B(i, j) * Rational(l));
    return r;
  }();
  return inv;
}
}  // namespace

bool order_coords(const HOct& x, std::array<std::int64_t, 8>& t) {
  const IntInv& inv = int_inv();
  for (int i = 0; i < 8; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < 8; ++j) s += inv.m[i][j] * x[j];
    if (s % inv.den != 0) return false;
    t[i] = s / inv.den;
  }
  return true;
}

HOct from_order_coords(const std::int64_t* t) {
  static const auto B2 = [] {
    std::array<std::array<std::int64_t, 8>, 8> b{};
    const RMat& B = order_basis(Alg::theta0);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) b[i][j] = to_int64(Rational(2) * B(i, j));
    return b;
  }();
  HOct r{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r[i] += B2[i][j] * t[j];
  return r;
}

}  // namespace kern
}  // namespace qmf
