#include "qmf/arith.hpp"

#include <stdexcept>

namespace qmf {

Integer sigma(int k, std::int64_t n) {
  if (n < 1) throw std::domain_error("sigma needs n >= 1");
  Integer s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += mp::pow(Integer(d), k);
    if (d != n / d) s += mp::pow(Integer(n / d), k);
  }
  return s;
}

std::vector<Integer> ramanujan_tau_table(int n) {
  if (n < 1) throw std::domain_error("tau needs n >= 1");
  // prod_{m>=1} (1 - q^m)^24 truncated at q^(n-1)
  std::vector<Integer> p(n, 0);
  p[0] = 1;
  for (int m = 1; m < n; ++m)
    for (int rep = 0; rep < 24; ++rep)
      for (int e = n - 1; e >= m; --e) p[e] -= p[e - m];
  return p;  // tau(i+1) = p[i]
}

Integer ramanujan_tau(int n) { return ramanujan_tau_table(n).back(); }

}  // namespace qmf
