#include "qmf/lattice.hpp"

#include <numeric>
#include <utility>

namespace qmf {

namespace {

// Column operation on (M, U): columns i, j <- (a*ci + b*cj, c*ci + d*cj).
void combine(IMat& M, IMat& U, int i, int j, std::int64_t a, std::int64_t b, std::int64_t c,
             std::int64_t d) {
  for (IMat* X : {&M, &U}) {
    for (int r = 0; r < X->rows(); ++r) {
      const std::int64_t xi = (*X)(r, i), xj = (*X)(r, j);
      (*X)(r, i) = a * xi + b * xj;
      (*X)(r, j) = c * xi + d * xj;
    }
  }
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1, y1;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::optional<AffineLattice> solve_integer(const IMat& A, const IVec& b) {
  const int m = static_cast<int>(A.rows()), k = static_cast<int>(A.cols());
  IMat H = A;
  IMat U = IMat::Identity(k, k);
  std::vector<int> pivot_row;
  int p = 0;
  for (int r = 0; r < m && p < k; ++r) {
    for (int j = p + 1; j < k; ++j) {
      if (H(r, j) == 0) continue;
      std::int64_t x, y;
      const std::int64_t a = H(r, p), c = H(r, j);
      const std::int64_t g = ext_gcd(a, c, x, y);
      // [x, -c/g; y, a/g] has determinant 1
      combine(H, U, p, j, x, y, -c / g, a / g);
    }
    if (H(r, p) != 0) {
      pivot_row.push_back(r);
      ++p;
    }
  }
  const int rank = p;
  IVec y = IVec::Zero(k);
  for (int i = 0; i < rank; ++i) {
    const int r = pivot_row[i];
    std::int64_t s = b(r);
    for (int j = 0; j < i; ++j) s -= H(r, j) * y(j);
    if (s % H(r, i) != 0) return std::nullopt;
    y(i) = s / H(r, i);
  }
  if (H * y != b) return std::nullopt;
  AffineLattice out;
  out.particular = U * y;
  out.kernel = U.rightCols(k - rank);
  return out;
}

}  // namespace qmf
