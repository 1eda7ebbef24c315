#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qmf {

using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct not_positive_definite : std::domain_error {
  using std::domain_error::domain_error;
};

// Fincke-Pohst: calls visit(const std::int64_t* v) for every integer vector v
// with (v - c)^T G (v - c) <= bound.  The last coordinate is the outermost
// loop.  visit may return false to stop early; the function then returns false.
// keep(k, v_k) lets callers prune on a coordinate as soon as it is fixed.
template <class Visit, class Keep>
bool enumerate_ellipsoid(const Eigen::MatrixXd& G, const Eigen::VectorXd& c, double bound,
                         Visit&& visit, Keep&& keep) {
  const int n = static_cast<int>(G.rows());
  if (n == 0) {
    std::int64_t dummy = 0;
    return visit(&dummy);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success) throw not_positive_definite("Gram matrix is not positive definite");
  const Eigen::MatrixXd R = llt.matrixU();
  Eigen::MatrixXd mu(n, n);  // mu(i,j) = R(i,j)/R(i,i), j > i
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) {
    q(i) = R(i, i) * R(i, i);
    for (int j = i + 1; j < n; ++j) mu(i, j) = R(i, j) / R(i, i);
  }
  const double slack = 1e-9 * (1.0 + std::abs(bound));
  std::vector<std::int64_t> v(n, 0), hi(n, 0);
  std::vector<double> rem(n + 1, 0.0), ctr(n, 0.0);
  rem[n] = bound + slack;
  int k = n - 1;
  auto init = [&](int i) {
    double s = c(i);
    for (int j = i + 1; j < n; ++j) s -= mu(i, j) * (double(v[j]) - c(j));
    ctr[i] = s;
    const double r = rem[i + 1] < 0 ? -1.0 : std::sqrt(rem[i + 1] / q(i));
    v[i] = static_cast<std::int64_t>(std::ceil(s - r));
    hi[i] = static_cast<std::int64_t>(std::floor(s + r));
  };
  init(k);
  while (true) {
    if (v[k] > hi[k]) {
      if (++k == n) return true;
      ++v[k];
      continue;
    }
    const double y = double(v[k]) - ctr[k];
    rem[k] = rem[k + 1] - q(k) * y * y;
    if (rem[k] < 0 || !keep(k, v[k])) {
      ++v[k];
      continue;
    }
    if (k == 0) {
      if (!visit(v.data())) return false;
      ++v[0];
    } else {
      --k;
      init(k);
    }
  }
}

template <class Visit>
bool enumerate_ellipsoid(const Eigen::MatrixXd& G, const Eigen::VectorXd& c, double bound,
                         Visit&& visit) {
  return enumerate_ellipsoid(G, c, bound, std::forward<Visit>(visit),
                             [](int, std::int64_t) { return true; });
}

// Integer solutions of A t = b: t = particular + kernel * s for s in Z^r.
struct AffineLattice {
  IVec particular;
  IMat kernel;
};
std::optional<AffineLattice> solve_integer(const IMat& A, const IVec& b);

}  // namespace qmf
