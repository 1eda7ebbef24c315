#pragma once

#include "qmf/freudenthal.hpp"

#include <random>

namespace qmf {

// Random integral elements with lattice coordinates drawn uniformly from
// [-bound, bound].
Comp<Rational> random_order_element(Alg a, std::mt19937_64& rng, int bound);
RJordan random_lattice_jordan(Alg a, std::mt19937_64& rng, int bound);
RJordan random_dual_jordan(Alg a, std::mt19937_64& rng, int bound);
RFreud random_integral_w(Alg a, std::mt19937_64& rng, int bound);

// Integral elements of a prescribed rank:
//   1: (1, X, X#, N(X))
//   2: (0, b, 0, 0) with b = [[c1, x3, 0], [conj x3, c2, 0], [0, 0, 0]], c1 c2 != n(x3)
//   3: (0, b, 0, 0) with N(b) != 0
//   4: a random integral element with q != 0
RFreud random_w_of_rank(Alg a, int rank, std::mt19937_64& rng, int bound);

}  // namespace qmf
