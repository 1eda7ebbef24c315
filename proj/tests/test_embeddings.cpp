#include "doctest.h"

#include "qmf/embeddings.hpp"
#include "qmf/sampling.hpp"

using namespace qmf;

namespace {

// Integral over the subalgebra with c in J0(sub) rather than its larger dual:
// J0(sub)^v is not contained in J0(theta0)^v = J0, so only this sublattice
// embeds integrally.
RFreud random_base(Alg a, std::mt19937_64& rng) {
  RFreud w = random_integral_w(a, rng, 2);
  w.c = random_lattice_jordan(a, rng, 2);
  return w;
}

CDSplit random_cd(std::mt19937_64& rng) {
  CDSplit e;
  e.base = random_base(Alg::hurwitz, rng);
  for (int i = 0; i < 3; ++i) {
    e.tail_b[i] = random_order_element(Alg::hurwitz, rng, 2);
    e.tail_c[i] = random_order_element(Alg::hurwitz, rng, 2);
  }
  return e;
}

GaussMat random_gauss_mat(std::mt19937_64& rng) {
  GaussMat m = gauss_zero();
  for (auto& row : m)
    for (auto& z : row) z = random_order_element(Alg::gauss, rng, 2);
  return m;
}

TitsSplit random_tits(std::mt19937_64& rng) {
  TitsSplit e;
  e.base = random_base(Alg::gauss, rng);
  e.eta1 = random_gauss_mat(rng);
  e.eta2 = random_gauss_mat(rng);
  return e;
}

}  // namespace

TEST_CASE("Cayley-Dickson embedding of the base is entrywise") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    CDSplit e;
    e.base = random_integral_w(Alg::hurwitz, rng, 2);
    const RFreud w = cd_embed(e);
    CHECK(w.a == e.base.a);
    CHECK(w.d == e.base.d);
    CHECK(w.b == embed(e.base.b, Alg::theta0));
    CHECK(w.c == embed(e.base.c, Alg::theta0));
  }
  CDSplit u;
  u.base.d = 1;
  CHECK(rank_w(cd_embed(u)) == 1);
}

TEST_CASE("Cayley-Dickson embedding is symplectic, integral and invertible") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const CDSplit e = random_cd(rng), f = random_cd(rng);
    const RFreud we = cd_embed(e), wf = cd_embed(f);
    REQUIRE(symp(we, wf) == symp(e.base, f.base) + cd_tail_symp(e, f));
    REQUIRE(is_integral(we));
    const CDSplit back = cd_split(we);
    REQUIRE(back.base == e.base);
    REQUIRE(back.tail_b == e.tail_b);
    REQUIRE(back.tail_c == e.tail_c);
  }
}

TEST_CASE("the dual lattice over a subalgebra does not embed integrally") {
  bool escapes = false;
  for (const RJordan& D : dual_lattice_basis(Alg::hurwitz)) {
    CDSplit e;
    e.base.c = D;
    escapes = escapes || !is_integral(cd_embed(e));
  }
  CHECK(escapes);
}

TEST_CASE("Tits embedding of the base") {
  for (Rational mu : {Rational(-1), Rational(2), Rational(5, 3)}) {
    TitsSplit e;
    e.base.b = identity<Rational>(Alg::gauss);
    e.base.d = mu;
    const RFreud w = tits_embed(e);
    CHECK(w.a == 0);
    CHECK(w.d == mu);
    CHECK(quartic(w) == 4 * mu);
  }
  TitsSplit u;
  u.base.d = 1;
  CHECK(rank_w(tits_embed(u)) == 1);
}

TEST_CASE("distinguished witness") {
  const TitsSplit wt = distinguished_witness();
  RFreud omega(Alg::gauss);
  omega.b = identity<Rational>(Alg::gauss);
  omega.d = -1;
  CHECK(wt.base == omega);
  CHECK(rank_w(wt.base) == 4);
  CHECK(quartic(wt.base) == -4);
  const RFreud w = tits_embed(wt);
  CHECK(rank_w(w) == 1);
  CHECK(is_integral(w));
  // b = (1, 1): the base identity plus eta1 = 1 in the tail.
  TitsElement b;
  b.base = identity<Rational>(Alg::gauss);
  b.tail = gauss_scalar(one<Rational>(Alg::gauss));
  CHECK(w.b == tits_assemble(b));
  // Both signs of kappa/2 in the c-slot give a rank-one integral element.
  TitsSplit other = wt;
  other.eta2 = gauss_scalar(unit<Rational>(Alg::gauss, 1));
  CHECK(rank_w(tits_embed(other)) == 1);
  CHECK(is_integral(tits_embed(other)));
}

TEST_CASE("Tits embedding is symplectic with orthogonal tail, integral and invertible") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const TitsSplit e = random_tits(rng), f = random_tits(rng);
    TitsSplit et = e, ft = f;
    et.base = RFreud(Alg::gauss);
    ft.base = RFreud(Alg::gauss);
    const RFreud we = tits_embed(e), wf = tits_embed(f);
    REQUIRE(symp(we, wf) == symp(e.base, f.base) + symp(tits_embed(et), tits_embed(ft)));
    REQUIRE(is_integral(we));
    const TitsSplit back = tits_split_w(we);
    REQUIRE(back.base == e.base);
    REQUIRE(back.eta1 == e.eta1);
    REQUIRE(back.eta2 == e.eta2);
  }
}
