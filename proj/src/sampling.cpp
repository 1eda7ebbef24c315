#include "qmf/sampling.hpp"

namespace qmf {

namespace {

std::int64_t draw(std::mt19937_64& rng, int bound) {
  return std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
}

RJordan combine(Alg a, const std::vector<RJordan>& basis, std::mt19937_64& rng, int bound) {
  RJordan X(a);
  for (const RJordan& B : basis)
    if (const std::int64_t t = draw(rng, bound)) X = X + Rational(t) * B;
  return X;
}

}  // namespace

Comp<Rational> random_order_element(Alg a, std::mt19937_64& rng, int bound) {
  RVec t(dim(a));
  for (int i = 0; i < dim(a); ++i) t(i) = draw(rng, bound);
  return from_order_coords(a, t);
}

RJordan random_lattice_jordan(Alg a, std::mt19937_64& rng, int bound) {
  return combine(a, jordan_lattice_basis(a), rng, bound);
}

RJordan random_dual_jordan(Alg a, std::mt19937_64& rng, int bound) {
  return combine(a, dual_lattice_basis(a), rng, bound);
}

RFreud random_integral_w(Alg a, std::mt19937_64& rng, int bound) {
  const Rational x = draw(rng, bound);
  const RJordan b = random_lattice_jordan(a, rng, bound);
  const RJordan c = random_dual_jordan(a, rng, bound);
  return {x, b, c, Rational(draw(rng, bound))};
}

RFreud random_w_of_rank(Alg a, int rank, std::mt19937_64& rng, int bound) {
  for (;;) {
    RFreud w(a);
    switch (rank) {
      case 1: {
        const RJordan X = random_lattice_jordan(a, rng, bound);
        w = {Rational(1), X, adjoint(X), cubic_norm(X)};
        break;
      }
      case 2:
        w.b.c(0) = draw(rng, bound);
        w.b.c(1) = draw(rng, bound);
        w.b.x[2] = random_order_element(a, rng, bound);
        break;
      case 3:
        w.b = random_lattice_jordan(a, rng, bound);
        break;
      case 4:
        w = random_integral_w(a, rng, bound);
        break;
      default:
        throw std::invalid_argument("rank must be 1..4");
    }
    if (rank_w(w) == rank) return w;
  }
}

}  // namespace qmf
