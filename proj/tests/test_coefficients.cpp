#include "doctest.h"

#include "qmf/arith.hpp"
#include "qmf/coefficients.hpp"
#include "qmf/embeddings.hpp"
#include "qmf/sampling.hpp"

#include <random>

using namespace qmf;

namespace {

RFreud unit_d(Alg a) {
  RFreud w(a);
  w.d = 1;
  return w;
}

}  // namespace

TEST_CASE("divisor sums and tau") {
  CHECK(sigma(3, 1) == 1);
  CHECK(sigma(3, 2) == 9);
  CHECK(sigma(3, 4) == 73);
  CHECK(sigma(4, 2) == 17);
  CHECK(sigma(4, 3) == 82);
  CHECK(sigma(11, 2) == 2049);
  const auto tau = ramanujan_tau_table(12);
  const std::vector<Integer> expect{1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944};
  REQUIRE(tau.size() >= 12);
  for (int n = 1; n <= 12; ++n) CHECK(ramanujan_tau(n) == expect[n - 1]);
  // multiplicativity and the prime-power recursion
  CHECK(ramanujan_tau(6) == ramanujan_tau(2) * ramanujan_tau(3));
  CHECK(ramanujan_tau(4) == ramanujan_tau(2) * ramanujan_tau(2) - Integer(2048));
}

TEST_CASE("theta coefficients") {
  const RFreud u = unit_d(Alg::theta0);
  CHECK(a_theta(u) == 1);
  CHECK(a_theta(Rational(2) * u) == 17);
  CHECK(a_theta(Rational(3) * u) == 82);
  CHECK(a_theta(flip(u)) == 1);
  RFreud r2(Alg::theta0);
  r2.b = diag<Rational>(Alg::theta0, 1, 1, 0);
  CHECK(rank_w(r2) == 2);
  CHECK(a_theta(r2) == 0);
  CHECK_THROWS(a_theta(RFreud(Alg::theta0)));

  // a_theta(k w) / a_theta(w) depends only on content for primitive rank-one w.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const RFreud w = random_w_of_rank(Alg::theta0, 1, rng, 1);
    if (content_w(w) != 1) continue;
    CHECK(a_theta(w) == 1);
    CHECK(a_theta(Rational(2) * w) == 17);
  }
}

TEST_CASE("Kim coefficients") {
  CHECK(kim_coeff(RJordan(Alg::theta0)) == Rational(1, 240));
  CHECK(kim_coeff(diag<Rational>(Alg::theta0, 1, 0, 0)) == 1);
  CHECK(kim_coeff(diag<Rational>(Alg::theta0, 0, 2, 0)) == 9);
  CHECK(kim_coeff(diag<Rational>(Alg::theta0, 1, 1, 0)) == 0);
  CHECK(kim_coeff(diag<Rational>(Alg::theta0, -1, 0, 0)) == 0);
}

TEST_CASE("Kim identity at small n") {
  const KimTheta k0 = kim_theta_identity(0);
  CHECK(k0.ok);
  const KimTheta k1 = kim_theta_identity(1);
  CHECK(k1.ok);
  CHECK(k1.sum_I == 3);
  CHECK(k1.sum_E == 0);
  CHECK(k1.lhs == 3);
  CHECK(k1.rhs == 3);
  CHECK(k1.weighted == Rational(273, 691));
  const KimTheta k2 = kim_theta_identity(2);
  CHECK(k2.ok);
  CHECK(k2.sum_I == 747);
  CHECK(k2.sum_E == 819);
  CHECK(k2.lhs == -72);
  CHECK(k2.rhs == 3 * ramanujan_tau(2));
  CHECK_THROWS(kim_theta_identity(-1));
}

TEST_CASE("fdelta") {
  CHECK(fdelta_coeff({1, 0, 0, 0}).value == 0);
  CHECK(fdelta_coeff({0, 0, 0, 1}).value == 0);
  const CoeffResult r = fdelta_coeff({0, Rational(1, 3), 0, 0});
  CHECK(r.value == 3);
  CHECK(r.complete);
  CHECK_THROWS_AS(fdelta_coeff({0, Rational(1, 2), 0, 0}), std::domain_error);
}

TEST_CASE("E7 pullback") {
  const std::int64_t H = 6;
  CHECK(e7_pullback_coeff(unit_d(Alg::hurwitz), H).value == 1);
  RFreud r2(Alg::hurwitz);
  r2.b = diag<Rational>(Alg::hurwitz, 1, 1, 0);
  CHECK(e7_pullback_coeff(r2, H).value == 24);
  std::mt19937_64 rng(5);
  for (int rank : {3, 4}) {
    const RFreud x = random_w_of_rank(Alg::hurwitz, rank, rng, 1);
    CHECK(e7_pullback_coeff(x, H).value == 0);
    CHECK(e7_pullback_coeff(x, H + 2).value == 0);
  }
  CHECK_THROWS(e7_pullback_coeff(unit_d(Alg::gauss), H));
}

TEST_CASE("E6 pullback") {
  const std::int64_t H = 6;
  const TitsSplit wt = distinguished_witness();
  const RFreud lifted = tits_embed(wt);
  const CoeffResult r = e6_pullback_coeff(wt.base, H);
  CHECK(r.value == 1344);
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), lifted) != r.witnesses.end());
  for (const RFreud& w : r.witnesses) {
    REQUIRE(rank_w(w) == 1);
    REQUIRE(is_integral(w));
    REQUIRE(tits_split_w(w).base == wt.base);
  }

  // q = 4 is minus a non-square: no rank-one lift exists.
  RFreud w(Alg::gauss);
  w.b = identity<Rational>(Alg::gauss);
  w.d = 1;
  CHECK(quartic(w) == 4);
  CHECK(e6_pullback_coeff(w, H).value == 0);

  const CoeffResult u = e6_pullback_coeff(unit_d(Alg::gauss), H);
  CHECK(u.value >= 1);
  CHECK_THROWS(e6_pullback_coeff(unit_d(Alg::hurwitz), H));
}
