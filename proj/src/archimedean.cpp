#include "qmf/archimedean.hpp"

#include "qmf/arith.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <limits>

namespace qmf {

void SymPoly::add(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymPoly SymPoly::constant(const Rational& c) { return monomial(0, 0, c); }
SymPoly SymPoly::x() { return monomial(1, 0); }
SymPoly SymPoly::y() { return monomial(0, 1); }
SymPoly SymPoly::monomial(int i, int j, const Rational& c) {
  SymPoly p;
  p.add({i, j}, c);
  return p;
}

Rational SymPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}
SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [m, c] : a.terms_)
    for (const auto& [n, d] : b.terms_) r.add({m.first + n.first, m.second + n.second}, c * d);
  return r;
}

SymPoly operator*(const Rational& c, const SymPoly& a) {
  SymPoly r;
  for (const auto& [m, d] : a.terms_) r.add(m, c * d);
  return r;
}

SymPoly SymPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  SymPoly r = constant(1), b = *this;
  for (; e; e >>= 1, b = b * b)
    if (e & 1) r = r * b;
  return r;
}

SymPoly SymPoly::substitute(const SymPoly& p, const SymPoly& q) const {
  SymPoly r;
  for (const auto& [m, c] : terms_) r += c * (p.pow(m.first) * q.pow(m.second));
  return r;
}

double kbessel(double v, double y) {
  if (!(y > 0)) throw std::domain_error("kbessel needs y > 0");
  // Fold t -> 1/t onto [1, inf) and pull out exp(-y):
  //   K_v(y) = e^-y int_1^inf (t^(v-1) + t^(-v-1))/2 exp(-y (t-1)^2 / (2t)) dt.
  auto f = [v, y](double t) {
    const double e = y * (t - 1) * (t - 1) / (2 * t);
    if (e > 745) return 0.0;
    const double lt = std::log(t);
    return 0.5 * (std::exp((v - 1) * lt - e) + std::exp((-v - 1) * lt - e));
  };
  boost::math::quadrature::exp_sinh<double> es;
  const double I = es.integrate(f, 1.0, std::numeric_limits<double>::infinity(), 1e-15);
  return I * std::exp(-y);
}

std::complex<double> whittaker_pairing(const RFreud& w, const Torus<Rational>& g) {
  const Alg a = w.alg();
  const RJordan one = identity<Rational>(a), zero(a);
  const RFreud re{Rational(1), zero, -one, Rational(0)};
  const RFreud im{Rational(0), -one, zero, Rational(1)};
  return {to_double(symp(w, torus_act(g, re))), to_double(symp(w, torus_act(g, im)))};
}

std::complex<double> whittaker(const RFreud& w, int n, int v, const Torus<Rational>& g) {
  if (std::abs(v) > n) throw std::domain_error("|v| must not exceed n");
  const std::complex<double> p = 2 * boost::math::constants::pi<double>() * whittaker_pairing(w, g);
  const double r = std::abs(p);
  if (r == 0) throw std::domain_error("pairing with r0(i) vanishes");
  const double nu = to_double(g.lambda);
  const std::complex<double> phase = std::polar(1.0, -v * std::arg(p));
  return std::pow(nu, n) * std::abs(nu) * phase * kbessel(v, r);
}

namespace {

Rational pochhammer_half(int m) {
  Rational r = 1;
  for (int j = 0; j < m; ++j) r *= Rational(2 * j + 1, 2);
  return r;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void check_even(int n) {
  if (n < 2 || n % 2) throw std::domain_error("n must be even and at least 2");
}

}  // namespace

SpecialValue f0_special(int n) {
  check_even(n);
  const double pi = boost::math::constants::pi<double>();
  SpecialValue r;
  r.rational_part = Rational(n % 4 == 0 ? 1 : -1) * pochhammer_half(n) / Rational(Integer(1) << n);
  const double z = boost::math::zeta(double(n + 1));
  r.value = to_double(r.rational_part) * z / std::pow(pi, n);
  // int_{GL1(R)} |t|^(s+n) e^(-pi t^2) d*t at s = n + 1.
  auto f = [n, pi](double t) { return std::pow(t, 2 * n) * std::exp(-pi * t * t); };
  const double I = 2 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                           f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-14);
  r.quadrature = z * (n % 4 == 0 ? 1.0 : -1.0) / std::ldexp(1.0, n) * I;
  r.monomial = SymPoly::monomial(n, n);
  return r;
}

SymPoly poly_identity_defect(int n, std::optional<std::pair<int, Rational>> perturb) {
  check_even(n);
  const SymPoly x = SymPoly::x(), y = SymPoly::y();
  const SymPoly q = x * x + y * y, xy = x * y;
  SymPoly lhs;
  for (int k = 0; k <= n; k += 2) {
    Rational poch = pochhammer_half(k / 2);
    if (perturb && perturb->first == k) poch += perturb->second;
    const Rational c = Rational(binomial(n, k)) * Rational(Integer(1) << k) * Rational((k / 2) % 2 ? -1 : 1) *
                       poch * Rational(factorial(n - k / 2 - 1));
    lhs += c * (q.pow(n - k) * xy.pow(k));
  }
  const SymPoly rhs = Rational(factorial(n - 1)) * (x.pow(2 * n) + y.pow(2 * n));
  return lhs - rhs;
}

bool poly_identity_check(int n, std::optional<std::pair<int, Rational>> perturb) {
  return poly_identity_defect(n, perturb).is_zero();
}

Rational f1_rank1_coeff(int n, std::int64_t a) {
  check_even(n);
  if (a < 1) throw std::domain_error("a must be positive");
  return Rational(2 * factorial(2 * n)) / Rational(Integer(1) << (2 * n)) * Rational(sigma(n, a));
}

ConstantTerms constant_term_constants(int n) {
  check_even(n);
  const double pi = boost::math::constants::pi<double>();
  ConstantTerms c;
  c.n = n;
  c.holomorphic = Rational(factorial(n - 1)) / Rational(Integer(1) << (2 * n));
  c.xnyn = f0_special(n).rational_part;
  c.holomorphic_value = to_double(c.holomorphic) * boost::math::zeta(double(n)) / std::pow(pi, n);
  c.xnyn_value = to_double(c.xnyn) * boost::math::zeta(double(n + 1)) / std::pow(pi, n);
  if (n == 4) {
    const Rational fact4sq = Rational(factorial(4) * factorial(4));
    c.normalization = c.xnyn * fact4sq / Rational(1, 32);
    c.rank_one_normalization = f1_rank1_coeff(4, 1) / Rational(1, 24);
  }
  return c;
}

std::array<Rational, 8> intertwiner_A_zeros() { return {31, 29, 22, 20, 14, 12, 5, 3}; }
std::array<Rational, 8> intertwiner_A_poles() { return {26, 24, 17, 15, 9, 7, 0, -2}; }

Rational intertwiner_A(const Rational& s) {
  Rational num = 1, den = 1;
  for (const Rational& z : intertwiner_A_zeros()) num *= s - z;
  for (const Rational& p : intertwiner_A_poles()) den *= s - p;
  if (den == 0) throw std::domain_error("A(s) has a pole at s = " + to_string(s));
  return num / den;
}

double intertwiner_A(double s) {
  double num = 1, den = 1;
  for (const Rational& z : intertwiner_A_zeros()) num *= s - to_double(z);
  for (const Rational& p : intertwiner_A_poles()) den *= s - to_double(p);
  if (den == 0) throw std::domain_error("A(s) has a pole");
  return num / den;
}

std::array<std::array<Rational, 3>, 3> basis_change_matrix() {
  // x = f1 + f2, y = f1 - f2; read b2^k in the monomials f1^8, f1^6 f2^2, f1^4 f2^4.
  const SymPoly X = SymPoly::x(), Y = SymPoly::y();
  const SymPoly x = X + Y, y = X - Y;
  const SymPoly b2[3] = {x.pow(8) + y.pow(8), x.pow(6) * y.pow(2) + x.pow(2) * y.pow(6), x.pow(4) * y.pow(4)};
  const SymPoly b1[3] = {X.pow(8) + Y.pow(8), X.pow(6) * Y.pow(2) + X.pow(2) * Y.pow(6), X.pow(4) * Y.pow(4)};
  std::array<std::array<Rational, 3>, 3> m;
  for (int col = 0; col < 3; ++col) {
    const SymPoly& p = b2[col];
    SymPoly rest = p;
    const Rational c[3] = {p.coeff(8, 0), p.coeff(6, 2), p.coeff(4, 4)};
    for (int row = 0; row < 3; ++row) {
      m[row][col] = c[row];
      rest -= c[row] * b1[row];
    }
    if (!rest.is_zero()) throw std::logic_error("b2 element outside the span of the b1 basis");
  }
  return m;
}

double intertwiner_cf(double s) {
  using boost::math::zeta;
  return zeta(2 * s - 29) * zeta(s - 28) * zeta(s - 23) * zeta(s - 19) /
         (zeta(2 * s - 28) * zeta(s) * zeta(s - 5) * zeta(s - 9));
}

IntertwinerData intertwiner_data(double s, std::optional<Rational> exact_s) {
  IntertwinerData d;
  d.s = s;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (exact_s) {
    d.A_exact = intertwiner_A(*exact_s);
    d.A = to_double(*d.A_exact);
  } else {
    d.A = intertwiner_A(s);
  }
  try {
    d.Z = intertwiner_Z<double>(s);
  } catch (const std::exception&) {
    d.Z = nan;
  }
  try {
    d.cf = intertwiner_cf(s);
  } catch (const std::exception&) {
    d.cf = nan;
  }
  d.matrix = basis_change_matrix();
  return d;
}

double c_function_ratio(double s, double h) {
  auto ratio = [](double t) {
    const auto v = composed_intertwiner<double>(t);
    return v[2] / (intertwiner_Z<double>(t) * intertwiner_A(t));
  };
  return (ratio(s - h) + ratio(s + h)) / 2;
}

}  // namespace qmf
