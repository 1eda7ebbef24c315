#include "doctest.h"

#include "qmf/archimedean.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

using namespace qmf;

namespace {

const double two_pi = 2 * boost::math::constants::pi<double>();

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST_CASE("K-Bessel against the standard library") {
  for (double y : {0.1, 0.5, 1.0, 2.0, two_pi, 10.0, 25.0, 50.0})
    for (int v = 0; v <= 12; ++v) {
      INFO("v = " << v << ", y = " << y);
      CHECK(rel(kbessel(v, y), std::cyl_bessel_k(double(v), y)) <= 1e-10);
      CHECK(rel(kbessel(v, y), kbessel(-v, y)) <= 1e-12);
    }
  CHECK(rel(kbessel(0.5, 3.0), std::sqrt(boost::math::constants::pi<double>() / 6.0) * std::exp(-3.0)) <= 1e-12);
  // K_0(y) = int_0^inf exp(-y cosh u) du
  const double k0 = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [](double u) { return std::exp(-two_pi * std::cosh(u)); }, 0.0, 10.0, 15, 1e-14);
  CHECK(rel(kbessel(0, two_pi), k0) <= 1e-12);
  CHECK_THROWS(kbessel(0, 0.0));
  CHECK_THROWS(kbessel(1, -1.0));
}

TEST_CASE("K-Bessel recurrence") {
  for (double y : {0.5, 2.0, 25.0})
    for (int v = -11; v <= 11; ++v)
      CHECK(rel(kbessel(v + 1, y), kbessel(v - 1, y) + 2.0 * v / y * kbessel(v, y)) <= 1e-9);
}

TEST_CASE("Whittaker functions") {
  RFreud w(Alg::theta0);
  w.d = 1;
  const Torus<Rational> g;
  const auto p = whittaker_pairing(w, g);
  CHECK(p.real() == doctest::Approx(-1.0));
  CHECK(p.imag() == doctest::Approx(0.0));
  CHECK(std::abs(whittaker(w, 0, 0, g) - kbessel(0, two_pi)) <= 1e-14);

  RFreud w2(Alg::theta0);
  w2.a = 1;
  w2.d = 1;
  for (int v = 1; v <= 4; ++v) {
    const auto plus = whittaker(w2, 4, v, g), minus = whittaker(w2, 4, -v, g);
    CHECK(std::abs(plus - std::conj(minus)) <= 1e-14 * std::abs(plus));
  }
  double last = std::abs(whittaker(w, 2, 1, g));
  for (int k = 2; k <= 5; ++k) {
    const double cur = std::abs(whittaker(Rational(k) * w, 2, 1, g));
    CHECK(cur < last);
    last = cur;
  }
  Torus<Rational> g2;
  g2.lambda = 2;
  CHECK(std::abs(whittaker(w, 2, 0, g2)) > 0);
  CHECK_THROWS(whittaker(w, 1, 2, g));
  CHECK_THROWS(whittaker(RFreud(Alg::theta0), 0, 0, g));
}

TEST_CASE("special value of f0") {
  const SpecialValue s4 = f0_special(4), s2 = f0_special(2);
  CHECK(s4.rational_part == Rational(105, 256));
  CHECK(s2.rational_part == Rational(-3, 16));
  CHECK(s4.monomial == SymPoly::monomial(4, 4));
  const double pi = boost::math::constants::pi<double>();
  CHECK(rel(s4.value, 105.0 / 256 * boost::math::zeta(5.0) / std::pow(pi, 4)) <= 1e-13);
  for (int n : {2, 4, 6, 8}) CHECK(rel(f0_special(n).value, f0_special(n).quadrature) <= 1e-8);
  CHECK_THROWS(f0_special(3));
  CHECK_THROWS(f0_special(0));
}

TEST_CASE("polynomial identity") {
  for (int n = 2; n <= 12; n += 2) {
    CHECK(poly_identity_defect(n).is_zero());
    CHECK_FALSE(poly_identity_check(n, std::make_pair(0, Rational(1, 3))));
    CHECK_FALSE(poly_identity_check(n, std::make_pair(2, Rational(1, 7))));
  }
  const SymPoly x = SymPoly::x(), y = SymPoly::y();
  CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
  CHECK((x * y).substitute(y, x) == x * y);
  CHECK((x - x).is_zero());
}

TEST_CASE("constant-term constants") {
  const ConstantTerms c4 = constant_term_constants(4);
  CHECK(c4.holomorphic == Rational(3, 128));
  CHECK(c4.xnyn == Rational(105, 256));
  REQUIRE(c4.rank_one_normalization);
  CHECK(*c4.rank_one_normalization == 7560);
  CHECK(f1_rank1_coeff(4, 1) == 315);
  CHECK(f1_rank1_coeff(4, 2) == 315 * 17);
  CHECK(constant_term_constants(2).normalization == std::nullopt);
}

TEST_CASE("intertwiner A") {
  for (const Rational& z : intertwiner_A_zeros()) CHECK(intertwiner_A(z) == 0);
  for (const Rational& p : intertwiner_A_poles()) CHECK_THROWS(intertwiner_A(p));
  CHECK(intertwiner_A(Rational(5)) == 0);
  CHECK(intertwiner_A(Rational(3)) == 0);
  CHECK(intertwiner_A(Rational(12)) == 0);
  const Rational s(27, 2);
  CHECK(rel(intertwiner_A(27.0 / 2), to_double(intertwiner_A(s))) <= 1e-12);
  const auto M = basis_change_matrix();
  const int want[3][3] = {{2, 2, 1}, {56, 8, -4}, {140, -20, 6}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(M[i][j] == want[i][j]);
}

TEST_CASE("composed c-function") {
  const double r0 = c_function_ratio(10.5);
  REQUIRE(std::isfinite(r0));
  REQUIRE(r0 != 0);
  for (double s : {11.25, 13.25, 15.75, 18.0, 21.5}) CHECK(rel(c_function_ratio(s), r0) <= 1e-6);
  CHECK(simple_reflection_c(2.5, 0) == doctest::Approx(gamma_R(2.5) / gamma_R(3.5)));
  CHECK(simple_reflection_c(1.0, 1) == 0.0);
  CHECK(short_reflection_c(2.0) == doctest::Approx(1.0 / 120));
  const IntertwinerData d = intertwiner_data(5.0, Rational(5));
  REQUIRE(d.A_exact);
  CHECK(*d.A_exact == 0);
  CHECK(d.A == 0.0);
}
