#include "qmf/coefficients.hpp"

#include "qmf/arith.hpp"

namespace qmf {

Integer a_theta(const RFreud& w) {
  if (w.is_zero()) throw std::domain_error("a_theta of zero");
  check_same(w.alg(), Alg::theta0);
  if (!is_integral(w)) throw std::domain_error("element is not integral");
  if (rank_w(w) != 1) return 0;
  return sigma(4, content_w(w).convert_to<std::int64_t>());
}

Rational kim_coeff(const RJordan& T) {
  if (T.is_zero()) return Rational(1, 240);
  const RJordan X = T.alg == Alg::theta0 ? T : embed(T, Alg::theta0);
  if (!in_lattice(X)) throw std::domain_error("element is not in J0");
  if (rank_jordan(X) != 1 || !is_psd(X)) return 0;
  return Rational(sigma(3, content_jordan(X).convert_to<std::int64_t>()));
}

CoeffResult fdelta_coeff(const std::array<Rational, 4>& w0, std::int64_t height) {
  const WEnum fi = omega_fiber(identity<Rational>(Alg::theta0), w0, height);
  const WEnum fe = omega_fiber(class_E(), w0, height);
  CoeffResult r;
  r.value = fi.aggregate - fe.aggregate;
  r.complete = fi.complete && fe.complete;
  r.witnesses = fi.elements;
  r.witnesses.insert(r.witnesses.end(), fe.elements.begin(), fe.elements.end());
  return r;
}

namespace {

CoeffResult pullback(const RFreud& x, Alg sub, std::int64_t height) {
  if (x.is_zero()) throw std::domain_error("pullback coefficient of zero");
  check_same(x.alg(), sub);
  const WEnum L = rank1_lifts(x, height);
  CoeffResult r;
  r.value = L.aggregate;
  r.complete = L.complete;
  r.witnesses = L.elements;
  return r;
}

}  // namespace

CoeffResult e7_pullback_coeff(const RFreud& x, std::int64_t height) { return pullback(x, Alg::hurwitz, height); }

CoeffResult e6_pullback_coeff(const RFreud& w, std::int64_t height) { return pullback(w, Alg::gauss, height); }

KimTheta kim_theta_identity(int n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
  KimTheta k;
  k.n = n;
  if (n == 0) {
    k.sum_I = k.sum_E = Rational(1, 240);
    k.rhs = 0;
    k.weighted_expected = Rational(1, 240);
  } else {
    k.sum_I = Rational(enum_rank1_psd_pairing(identity<Rational>(Alg::theta0), n, false).aggregate);
    k.sum_E = Rational(enum_rank1_psd_pairing(class_E(), n, false).aggregate);
    k.rhs = Rational(3 * ramanujan_tau(n));
    k.weighted_expected = Rational(273 * sigma(11, n)) / 691;
  }
  k.lhs = k.sum_I - k.sum_E;
  k.weighted = (91 * k.sum_I + 600 * k.sum_E) / 691;
  k.ok = k.lhs == k.rhs && k.weighted == k.weighted_expected;
  return k;
}

}  // namespace qmf
