#include "doctest.h"

#include "qmf/enumeration.hpp"
#include "qmf/sampling.hpp"

using namespace qmf;

namespace {

const Alg all_algs[] = {Alg::rat, Alg::gauss, Alg::hurwitz, Alg::theta0};
const Alg O = Alg::theta0;

RJordan conj_entries(const RJordan& X) {
  RJordan R = X;
  for (auto& x : R.x) x = conj(x);
  return R;
}

// Conjugation by the transposition (1 2) and by diag(-1, 1, 1).
RJordan swap12(const RJordan& X) {
  RJordan R(X.alg);
  R.c << X.c(1), X.c(0), X.c(2);
  R.x = {conj(X.x[1]), conj(X.x[0]), conj(X.x[2])};
  return R;
}
RJordan flip1(const RJordan& X) {
  RJordan R = X;
  R.x[1] = -X.x[1];
  R.x[2] = -X.x[2];
  return R;
}

TitsElement random_tits(std::mt19937_64& rng, int bound) {
  TitsElement t;
  t.base = random_lattice_jordan(Alg::gauss, rng, bound);
  for (auto& row : t.tail)
    for (auto& z : row) z = random_order_element(Alg::gauss, rng, bound);
  return t;
}

}  // namespace

TEST_CASE("cubic norm examples") {
  CHECK(cubic_norm(identity<Rational>(O)) == 1);
  CHECK(cubic_norm(class_E()) == 1);
  CHECK(cubic_norm(diag<Rational>(O, 2, 3, 5)) == 30);
  std::mt19937_64 rng(3);
  const RJordan X = random_lattice_jordan(O, rng, 2);
  CHECK(cubic_norm(Rational(3) * X) == 27 * cubic_norm(X));
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(identity<Rational>(O)) == identity<Rational>(O));
  CHECK(adjoint(e_ii<Rational>(O, 0)).is_zero());
  const RJordan E = class_E();
  // E# has conj(beta) off the diagonal, so it is the entrywise conjugate of E.
  CHECK(adjoint(E) == conj_entries(E));
  CHECK_FALSE(adjoint(E) == E);
  CHECK(adjoint(adjoint(E)) == E);
}

TEST_CASE("trace pairing examples") {
  const RJordan I = identity<Rational>(O), E = class_E();
  CHECK(trace_pair(I, I) == 3);
  CHECK(trace_pair(E, I) == 6);
  CHECK(trace_pair(E, E) == 24);
  CHECK(trace_pair(adjoint(E), I) == 6);
}

TEST_CASE("rank and positivity examples") {
  CHECK(rank_jordan(e_ii<Rational>(O, 0)) == 1);
  CHECK(rank_jordan(identity<Rational>(O)) == 3);
  CHECK(rank_jordan(class_E()) == 3);
  CHECK(rank_jordan(diag<Rational>(O, 1, 1, 0)) == 2);
  CHECK(rank_jordan(RJordan(O)) == 0);
  CHECK(is_psd(identity<Rational>(O)));
  CHECK_FALSE(is_psd(diag<Rational>(O, 1, -1, 0)));
  CHECK(is_psd(class_E()));
  CHECK(is_positive_definite(class_E()));
}

TEST_CASE("content examples") {
  CHECK(content_jordan(e_ii<Rational>(O, 0)) == 1);
  CHECK(content_jordan(Rational(2) * identity<Rational>(O)) == 2);
  CHECK(content_jordan(class_E()) == 1);
  CHECK(content_jordan(Rational(6) * class_E()) == 6);
  CHECK_THROWS(content_jordan(RJordan(O)));
}

TEST_CASE("dual lattices") {
  // theta0: self-dual
  for (const RJordan& Y : dual_lattice_basis(O)) CHECK(in_lattice(Y));
  CHECK(exact_det(jordan_gram(O)) == 1);
  // Z entries: the trace form doubles off-diagonal products, so the dual has
  // half-integral off-diagonal entries and index 8.
  CHECK(exact_det(jordan_gram(Alg::rat)) == 8);
  RJordan half(Alg::rat);
  half.x[0] = scalar(Alg::rat, Rational(1, 2));
  CHECK(in_dual_lattice(half));
  CHECK_FALSE(in_lattice(half));
  // Hurwitz: strictly larger dual
  CHECK(exact_det(jordan_gram(Alg::hurwitz)) > 1);
  bool larger = false;
  for (const RJordan& Y : dual_lattice_basis(Alg::hurwitz)) larger = larger || !in_lattice(Y);
  CHECK(larger);
  for (Alg a : all_algs)
    for (const RJordan& X : jordan_lattice_basis(a)) CHECK(in_dual_lattice(X));
}

TEST_CASE("cubic norm structure identities on random samples") {
  std::mt19937_64 rng(5);
  for (Alg a : all_algs)
    for (int i = 0; i < 500; ++i) {
      const RJordan X = random_lattice_jordan(a, rng, 2), Y = random_lattice_jordan(a, rng, 2);
      const Rational N = cubic_norm(X);
      REQUIRE(adjoint(adjoint(X)) == N * X);
      REQUIRE(trace_pair(X, adjoint(X)) == 3 * N);
      REQUIRE(cubic_norm(X + Y) - N - cubic_norm(Y) == trace_pair(adjoint(X), Y) + trace_pair(X, adjoint(Y)));
      REQUIRE(cross(X, Y) == cross(Y, X));
      const int r = rank_jordan(X);
      REQUIRE(rank_jordan(swap12(X)) == r);
      REQUIRE(rank_jordan(flip1(X)) == r);
      REQUIRE(cubic_norm(swap12(X)) == N);
    }
}

TEST_CASE("rank-one positive elements have positive trace") {
  const JordanEnum r = enum_rank1_psd_pairing(identity<Rational>(O), 2);
  for (const RJordan& T : r.elements) CHECK(trace_pair(T, identity<Rational>(O)) > 0);
  const JordanEnum one = enum_rank1_psd_pairing(identity<Rational>(O), 1);
  REQUIRE(one.elements.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(std::find(one.elements.begin(), one.elements.end(), e_ii<Rational>(O, i)) != one.elements.end());
}

TEST_CASE("second Tits construction") {
  TitsElement base_only;
  base_only.base = identity<Rational>(Alg::gauss);
  const RJordan A = tits_assemble(base_only);
  CHECK(A.alg == O);
  CHECK(cubic_norm(A) == 1);
  CHECK(rank_jordan(A) == 3);

  TitsElement tail_only;
  tail_only.tail = gauss_scalar(one<Rational>(Alg::gauss));
  const RJordan B = tits_assemble(tail_only);
  CHECK(cubic_norm(B) == tits_norm(tail_only));
  CHECK(adjoint(adjoint(B)) == cubic_norm(B) * B);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const TitsElement t = random_tits(rng, 2);
    const RJordan X = tits_assemble(t);
    REQUIRE(cubic_norm(X) == tits_norm(t));
    REQUIRE(in_lattice(X));
    if (!X.is_zero()) REQUIRE(trace_pair(X, X) > 0);
    const TitsElement back = tits_split(X);
    REQUIRE(back.base == t.base);
    REQUIRE(back.tail == t.tail);
  }
}
