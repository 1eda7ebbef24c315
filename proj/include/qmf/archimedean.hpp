#pragma once

#include "qmf/freudenthal.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <utility>

namespace qmf {

// Polynomial in x, y with exact rational coefficients.
class SymPoly {
 public:
  using Mono = std::pair<int, int>;  // (deg x, deg y)

  SymPoly() = default;
  static SymPoly constant(const Rational& c);
  static SymPoly x();
  static SymPoly y();
  static SymPoly monomial(int i, int j, const Rational& c = 1);

  Rational coeff(int i, int j) const;
  const std::map<Mono, Rational>& terms() const { return terms_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const Rational& c, const SymPoly& a);
  bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }

  SymPoly pow(int e) const;
  // Substitute x -> p, y -> q.
  SymPoly substitute(const SymPoly& p, const SymPoly& q) const;

 private:
  void add(const Mono& m, const Rational& c);
  std::map<Mono, Rational> terms_;
};

// K_v(y) = 1/2 int_0^inf t^(v-1) exp(-y (t + 1/t) / 2) dt by exp-sinh quadrature.
double kbessel(double v, double y);

// <w, g r0(i)> with r0(i) = (1, -i 1_J, -1_J, i), g in the diagonal torus.
std::complex<double> whittaker_pairing(const RFreud& w, const Torus<Rational>& g);
// nu^n |nu| (|p|/p)^v K_v(|p|), p = <2 pi w, g r0(i)>, nu = lambda.
std::complex<double> whittaker(const RFreud& w, int n, int v, const Torus<Rational>& g);

// f0(1, s = n+1) = zeta(n+1) (-1)^(n/2) 2^-n pi^-n (1/2)_n x^n y^n.
struct SpecialValue {
  Rational rational_part;  // (-1)^(n/2) (1/2)_n / 2^n
  double value;            // times zeta(n+1) / pi^n
  double quadrature;       // zeta(n+1) (-1)^(n/2) 2^-n * int_{GL1} |t|^(2n+1) e^(-pi t^2) d*t
  SymPoly monomial;        // x^n y^n
};
SpecialValue f0_special(int n);

// Left side minus right side of
//   sum_{k even} C(n,k) 2^k (-1)^(k/2) (x^2+y^2)^(n-k) (xy)^k (1/2)_(k/2) Gamma(n-k/2)
//     = Gamma(n) (x^(2n) + y^(2n)).
// perturb = (k, delta) adds delta to the Pochhammer factor at that k.
SymPoly poly_identity_defect(int n, std::optional<std::pair<int, Rational>> perturb = std::nullopt);
bool poly_identity_check(int n, std::optional<std::pair<int, Rational>> perturb = std::nullopt);

// 2 (2n)! / 4^n * sigma_n(a)
Rational f1_rank1_coeff(int n, std::int64_t a);

struct ConstantTerms {
  int n = 0;
  Rational holomorphic;  // Gamma(n) / 4^n, multiplies zeta(n) / pi^n
  Rational xnyn;         // (-1)^(n/2) (1/2)_n / 2^n, multiplies zeta(n+1) / pi^n
  double holomorphic_value = 0, xnyn_value = 0;
  // n = 4 only: the x^4 y^4 constant in the basis x^4 y^4 / (4! 4!) divided by
  // zeta(5) / (pi^4 2^5), and the rank-one coefficient f1(4, 1) divided by 1/24.
  std::optional<Rational> normalization, rank_one_normalization;
};
ConstantTerms constant_term_constants(int n);

// Exact A(s); throws at its poles.
Rational intertwiner_A(const Rational& s);
double intertwiner_A(double s);
std::array<Rational, 8> intertwiner_A_zeros();
std::array<Rational, 8> intertwiner_A_poles();

// Columns are b2^2, b2^1, b2^0 written in b1^2, b1^1, b1^0 (b2: x, y; b1: f1, f2).
std::array<std::array<Rational, 3>, 3> basis_change_matrix();

template <class Real> Real gamma_R(const Real& s) {
  using boost::math::constants::pi;
  return pow(pi<Real>(), -s / 2) * boost::math::tgamma(s / 2);
}
template <class Real> Real gamma_C(const Real& s) {
  using boost::math::constants::pi;
  return 2 * pow(2 * pi<Real>(), -s) * boost::math::tgamma(s);
}

template <class Real> Real intertwiner_Z(const Real& s) {
  using G = Real (*)(const Real&);
  const G R = gamma_R<Real>, C = gamma_C<Real>;
  return (R(2 * s - 29) * R(s - 28) * R(s - 19) * R(s - 11) * R(s - 2)) /
         (R(2 * s - 28) * R(s - 26) * R(s - 17) * R(s - 9) * R(s)) *
         (C(s - 23) * C(s - 14)) / (C(s - 11) * C(s - 2));
}

double intertwiner_cf(double s);

// Long root: zeta_R(s)/zeta_R(s+1) * ((1-s)/2)_k / ((1+s)/2)_k.
template <class Real> Real simple_reflection_c(const Real& s, int k) {
  Real r = gamma_R<Real>(s) / gamma_R<Real>(s + 1);
  for (int j = 0; j < k; ++j) r *= ((1 - s) / 2 + j) / ((1 + s) / 2 + j);
  return r;
}
// Short root: Gamma(z) / Gamma(z + 4).
template <class Real> Real short_reflection_c(const Real& z) {
  return boost::math::tgamma(z) / boost::math::tgamma(z + 4);
}

// M(w0)[lambda_s, b2^0] composed from the fifteen simple reflections of
// w0 = [1,2,3,2,1,4,3,2,1,3,2,4,3,2,1].  Returns the b2-coordinates
// (b2^2, b2^1, b2^0) of the image.
template <class Real> std::array<Real, 3> composed_intertwiner(const Real& s);

struct IntertwinerData {
  double s = 0;
  std::optional<Rational> A_exact;
  double A = 0, Z = 0, cf = 0;
  std::array<std::array<Rational, 3>, 3> matrix;
};
IntertwinerData intertwiner_data(double s, std::optional<Rational> exact_s = std::nullopt);

// Ratio composed / (Z(s) A(s)) at s, evaluated as the mean over s +- h to
// step around removable singularities of the individual factors.
double c_function_ratio(double s, double h = 1e-6);

}  // namespace qmf

#include "qmf/archimedean_impl.hpp"
