#include "qmf/enumeration.hpp"

#include "qmf/arith.hpp"
#include "qmf/kernel.hpp"
#include "qmf/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace qmf {

namespace {

using kern::HOct;
using I64 = std::int64_t;

// Element of J0 = H3(theta0) with doubled off-diagonal coordinates.
struct HJ {
  std::array<I64, 3> c{};
  std::array<HOct, 3> x{};
  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && kern::is_zero(x[0]) && kern::is_zero(x[1]) &&
           kern::is_zero(x[2]);
  }
};

struct HW {
  I64 a = 0;
  HJ b, c;
  I64 d = 0;
};

HJ to_hj(const RJordan& X) {
  const RJordan Y = X.alg == Alg::theta0 ? X : embed(X, Alg::theta0);
  HJ h;
  for (int i = 0; i < 3; ++i) {
    h.c[i] = to_int64(Y.c(i));
    h.x[i] = kern::from_comp(Y.x[i]);
  }
  return h;
}

RJordan to_rj(const HJ& h) {
  RJordan X(Alg::theta0);
  for (int i = 0; i < 3; ++i) {
    X.c(i) = h.c[i];
    X.x[i] = kern::to_comp(h.x[i]);
  }
  return X;
}

RFreud to_rw(const HW& w) { return {Rational(w.a), to_rj(w.b), to_rj(w.c), Rational(w.d)}; }

HJ neg(const HJ& X) {
  HJ R;
  for (int i = 0; i < 3; ++i) {
    R.c[i] = -X.c[i];
    R.x[i] = kern::scale(-1, X.x[i]);
  }
  return R;
}

HJ hadjoint(const HJ& X) {
  HJ R;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    R.c[i] = X.c[j] * X.c[k] - kern::norm4(X.x[i]) / 4;
    R.x[i] = kern::sub(kern::conj(kern::mul(X.x[j], X.x[k])), kern::scale(X.c[i], X.x[i]));
  }
  return R;
}

I64 hpair(const HJ& X, const HJ& Y) {
  I64 s = 0;
  for (int i = 0; i < 3; ++i) s += X.c[i] * Y.c[i] + kern::dot(X.x[i], Y.x[i]) / 2;
  return s;
}

I64 hnorm(const HJ& X) {
  const HOct raw = kern::raw_mul(kern::mul(X.x[0], X.x[1]), X.x[2]);
  I64 s = X.c[0] * X.c[1] * X.c[2] + raw[0] / 2;
  for (int i = 0; i < 3; ++i) s -= X.c[i] * kern::norm4(X.x[i]) / 4;
  return s;
}

// J0 coordinates; false if X is not in J0.
bool hcoords(const HJ& X, std::array<I64, 27>& t) {
  for (int i = 0; i < 3; ++i) t[i] = X.c[i];
  for (int i = 0; i < 3; ++i) {
    std::array<I64, 8> o;
    if (!kern::order_coords(X.x[i], o)) return false;
    std::copy(o.begin(), o.end(), t.begin() + 3 + 8 * i);
  }
  return true;
}

HJ from_hcoords(const I64* v) {
  HJ X;
  for (int i = 0; i < 3; ++i) {
    X.c[i] = v[i];
    X.x[i] = kern::from_order_coords(v + 3 + 8 * i);
  }
  return X;
}

I64 hcontent(const HJ& X) {
  std::array<I64, 27> t;
  if (!hcoords(X, t)) throw std::domain_error("element is not in J0");
  I64 g = 0;
  for (I64 v : t) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

// X / s when the quotient stays in J0.
bool hdivide(const HJ& X, I64 s, HJ& out) {
  for (int i = 0; i < 3; ++i) {
    if (X.c[i] % s) return false;
    out.c[i] = X.c[i] / s;
    for (int j = 0; j < 8; ++j) {
      if (X.x[i][j] % s) return false;
      out.x[i][j] = X.x[i][j] / s;
    }
  }
  std::array<I64, 27> t;
  return hcoords(out, t);
}

std::array<I64, 27> sort_key(const HJ& X) {
  std::array<I64, 27> t{};
  hcoords(X, t);
  return t;
}

// Gram matrix G of an exact quadratic form f on Z^n, with v^T G v = f(v) / scale.
template <class F> Eigen::MatrixXd polar_gram(int n, F&& f, double scale) {
  std::vector<I64> v(n, 0);
  std::vector<I64> diag(n);
  for (int i = 0; i < n; ++i) {
    v[i] = 1;
    diag[i] = f(v.data());
    v[i] = 0;
  }
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i) {
    G(i, i) = double(diag[i]) / scale;
    for (int j = i + 1; j < n; ++j) {
      v[i] = v[j] = 1;
      const I64 fij = f(v.data());
      v[i] = v[j] = 0;
      G(i, j) = G(j, i) = double(fij - diag[i] - diag[j]) / (2.0 * scale);
    }
  }
  return G;
}

I64 ceil_half_abs(I64 v) { return (std::abs(v) + 1) / 2; }

void check_pairing_element(const RJordan& K) {
  if (!is_positive_definite(K)) throw not_positive_definite("pairing element must be positive definite");
  if (!in_lattice(K.alg == Alg::theta0 ? K : embed(K, Alg::theta0)))
    throw std::domain_error("pairing element must lie in J0");
}

std::vector<HJ> rank1_psd_core(const HJ& k, I64 n, JordanEnum& R, bool keep) {
  std::vector<HJ> found;
  auto add = [&](const HJ& T) {
    if (!hadjoint(T).is_zero() || hpair(T, k) != n) throw std::logic_error("rank-one enumeration check failed");
    const I64 g = hcontent(T);
    ++R.count;
    R.aggregate += sigma(3, g);
    ++R.by_content[g];
    if (keep) found.push_back(T);
  };

  // c1 > 0: v = (x2, x3, c1) in order coordinates; c2 = n(x3)/c1, c3 = n(x2)/c1,
  // x1 = conj(x2 x3)/c1.  4 c1 (T, K) is a quadratic form in v.
  {
    auto q4 = [&](const I64* v) -> I64 {
      const HOct D2 = kern::from_order_coords(v), D3 = kern::from_order_coords(v + 8);
      const I64 c1 = v[16];
      return 4 * c1 * c1 * k.c[0] + kern::norm4(D3) * k.c[1] + kern::norm4(D2) * k.c[2] +
             2 * c1 * kern::dot(D2, k.x[1]) + 2 * c1 * kern::dot(D3, k.x[2]) +
             kern::dot(kern::conj(kern::raw_mul(D2, D3)), k.x[0]);
    };
    const Eigen::MatrixXd G = polar_gram(17, q4, 4.0);
    const Eigen::MatrixXd Gi = G.inverse();
    const Eigen::VectorXd ctr = (double(n) / 2.0) * Gi.col(16);
    const double bound = double(n) * double(n) / 4.0 * Gi(16, 16);
    enumerate_ellipsoid(
        G, ctr, bound,
        [&](const I64* v) {
          const I64 c1 = v[16];
          if (q4(v) != 4 * n * c1) return true;
          const HOct D2 = kern::from_order_coords(v), D3 = kern::from_order_coords(v + 8);
          const I64 n2 = kern::norm4(D2), n3 = kern::norm4(D3);
          if (n3 % (4 * c1) || n2 % (4 * c1)) return true;
          HOct D1 = kern::conj(kern::mul(D2, D3));
          for (auto& t : D1) {
            if (t % c1) return true;
            t /= c1;
          }
          std::array<I64, 8> o;
          if (!kern::order_coords(D1, o)) return true;
          HJ T;
          T.c = {c1, n3 / (4 * c1), n2 / (4 * c1)};
          T.x = {D1, D2, D3};
          add(T);
          return true;
        },
        [](int idx, I64 val) { return idx != 16 || val >= 1; });
  }
  // c1 = 0, c2 > 0: v = (x1, c2), c3 = n(x1)/c2.
  {
    auto q4 = [&](const I64* v) -> I64 {
      const HOct D1 = kern::from_order_coords(v);
      const I64 c2 = v[8];
      return 4 * c2 * c2 * k.c[1] + kern::norm4(D1) * k.c[2] + 2 * c2 * kern::dot(D1, k.x[0]);
    };
    const Eigen::MatrixXd G = polar_gram(9, q4, 4.0);
    const Eigen::MatrixXd Gi = G.inverse();
    const Eigen::VectorXd ctr = (double(n) / 2.0) * Gi.col(8);
    const double bound = double(n) * double(n) / 4.0 * Gi(8, 8);
    enumerate_ellipsoid(
        G, ctr, bound,
        [&](const I64* v) {
          const I64 c2 = v[8];
          if (q4(v) != 4 * n * c2) return true;
          const HOct D1 = kern::from_order_coords(v);
          const I64 n1 = kern::norm4(D1);
          if (n1 % (4 * c2)) return true;
          HJ T;
          T.c = {0, c2, n1 / (4 * c2)};
          T.x[0] = D1;
          add(T);
          return true;
        },
        [](int idx, I64 val) { return idx != 8 || val >= 1; });
  }
  if (n % k.c[2] == 0) {
    HJ T;
    T.c = {0, 0, n / k.c[2]};
    add(T);
  }
  std::sort(found.begin(), found.end(), [](const HJ& x, const HJ& y) { return sort_key(x) < sort_key(y); });
  return found;
}

// Rank <= 1 elements s*T, T >= 0, with (s*T, K) = target.
std::vector<HJ> signed_rank1(const HJ& k, I64 target) {
  if (target == 0) return {HJ{}};
  JordanEnum scratch;
  std::vector<HJ> v = rank1_psd_core(k, std::abs(target), scratch, true);
  if (target < 0)
    for (auto& t : v) t = neg(t);
  return v;
}

// Rank-one w with (b, Kb) = Bt, (c, Kc) = Ct and given a, d.
std::vector<HW> fiber_core(const HJ& Kb, const HJ& Kc, I64 a, I64 Bt, I64 Ct, I64 d,
                           std::uint64_t work_limit, bool& complete) {
  std::vector<HW> out;
  if (a != 0) {
    // c = X#/a, d = N(X)/a^2; Q(X) = (X, Kb)^2 - 2 (X#, Kc) = Bt^2 - 2 a Ct.
    const I64 R = Bt * Bt - 2 * a * Ct;
    if (R < 0) return out;
    auto q = [&](const I64* v) -> I64 {
      const HJ X = from_hcoords(v);
      const I64 p = hpair(X, Kb);
      return p * p - 2 * hpair(hadjoint(X), Kc);
    };
    const Eigen::MatrixXd G = polar_gram(27, q, 1.0);
    enumerate_ellipsoid(G, Eigen::VectorXd::Zero(27), double(R), [&](const I64* v) {
      const HJ X = from_hcoords(v);
      if (hpair(X, Kb) != Bt) return true;
      const HJ Xs = hadjoint(X);
      if (hpair(Xs, Kc) != a * Ct || hnorm(X) != a * a * d) return true;
      HW w;
      if (!hdivide(Xs, a, w.c)) return true;
      w.a = a;
      w.b = X;
      w.d = d;
      out.push_back(w);
      return true;
    });
    return out;
  }
  if (d != 0) {
    for (const HW& w : fiber_core(Kc, Kb, d, Ct, Bt, 0, work_limit, complete))
      out.push_back({w.d, w.c, w.b, w.a});
    return out;
  }
  if (Bt == 0 && Ct == 0) return out;
  const std::vector<HJ> bs = signed_rank1(Kb, Bt), cs = signed_rank1(Kc, Ct);
  if (std::uint64_t(bs.size()) * cs.size() > work_limit) {
    complete = false;
    return out;
  }
  for (const HJ& b : bs)
    for (const HJ& c : cs)
      if (hpair(b, c) == 0) out.push_back({0, b, c, 0});
  return out;
}

WEnum finish(std::vector<RFreud> ws) {
  WEnum r;
  std::vector<std::pair<std::vector<Rational>, RFreud>> keyed;
  keyed.reserve(ws.size());
  for (auto& w : ws) {
    if (rank_w(w) != 1 || !is_integral(w)) throw std::logic_error("enumerated element fails its predicate");
    const RVec t = w_coords(w);
    keyed.emplace_back(std::vector<Rational>(t.data(), t.data() + t.size()), std::move(w));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, w] : keyed) {
    r.aggregate += sigma(4, content_w(w).convert_to<std::int64_t>());
    r.elements.push_back(std::move(w));
  }
  return r;
}

}  // namespace

JordanEnum enum_rank1_psd_pairing(const RJordan& K, std::int64_t n, bool keep_elements) {
  if (n < 1) throw std::domain_error("pairing target must be positive");
  check_pairing_element(K);
  JordanEnum R;
  for (const HJ& T : rank1_psd_core(to_hj(K), n, R, keep_elements)) R.elements.push_back(to_rj(T));
  return R;
}

std::array<Rational, 4> contract(const RFreud& w, const RJordan& K) {
  const RJordan Kt = K.alg == w.alg() ? K : embed(K, w.alg());
  return {w.a, trace_pair(w.b, adjoint(Kt)) / 3, trace_pair(w.c, Kt) / 3, w.d};
}

WEnum omega_fiber(const RJordan& K, const std::array<Rational, 4>& w0, std::int64_t height,
                  std::uint64_t work_limit) {
  for (int i = 0; i < 4; ++i) {
    const Rational s = (i == 0 || i == 3) ? w0[i] : Rational(3) * w0[i];
    if (!is_integer(s)) throw std::domain_error("omega0 must lie in Z + Z/3 + Z/3 + Z");
  }
  check_pairing_element(K);
  const RJordan Kt = K.alg == Alg::theta0 ? K : embed(K, Alg::theta0);
  bool complete = true;
  const std::vector<HW> raw =
      fiber_core(to_hj(adjoint(Kt)), to_hj(Kt), to_int64(w0[0]), to_int64(Rational(3) * w0[1]),
                 to_int64(Rational(3) * w0[2]), to_int64(w0[3]), work_limit, complete);
  std::vector<RFreud> ws;
  std::uint64_t excluded = 0;
  for (const HW& h : raw) {
    RFreud w = to_rw(h);
    if (height > 0 && height_w(w) > height) {
      ++excluded;
      continue;
    }
    ws.push_back(std::move(w));
  }
  WEnum r = finish(std::move(ws));
  r.excluded = excluded;
  r.complete = complete && excluded == 0;
  return r;
}

std::vector<std::array<std::int64_t, 8>> coset_shell(Alg sub, const Comp<Rational>& k, std::int64_t m) {
  if (m < 0) return {};
  const int d = dim(sub);
  if (sub == Alg::theta0) throw std::domain_error("coset shells need a proper subalgebra");
  IVec rhs(d);
  for (int i = 0; i < d; ++i) {
    const Rational t = Rational(2) * k.v(i);
    if (!is_integer(t)) return {};
    rhs(i) = to_int64(t);
  }
  for (int i = d; i < 8; ++i)
    if (k.v(i) != 0) throw algebra_mismatch("projection target outside the subalgebra");
  // Doubled basis matrix: D = B2 t.
  IMat B2(8, 8);
  {
    std::array<I64, 8> e{};
    for (int j = 0; j < 8; ++j) {
      e.fill(0);
      e[j] = 1;
      const HOct col = kern::from_order_coords(e.data());
      for (int i = 0; i < 8; ++i) B2(i, j) = col[i];
    }
  }
  const auto sol = solve_integer(B2.topRows(d), rhs);
  if (!sol) return {};
  const IVec Z0 = B2 * sol->particular;
  const IMat M = B2 * sol->kernel;
  const int r = static_cast<int>(M.cols());
  const Eigen::MatrixXd Md = M.cast<double>();
  const Eigen::VectorXd z0 = Z0.cast<double>();
  const Eigen::MatrixXd G = Md.transpose() * Md;
  const Eigen::VectorXd ctr = -G.ldlt().solve(Md.transpose() * z0);
  const double floor_val = (z0 + Md * ctr).squaredNorm();
  std::vector<std::array<std::int64_t, 8>> out;
  const double bound = double(4 * m) - floor_val;
  if (bound < -1e-6) return out;
  enumerate_ellipsoid(G, ctr, std::max(bound, 0.0), [&](const I64* s) {
    HOct z;
    for (int i = 0; i < 8; ++i) {
      I64 v = Z0(i);
      for (int j = 0; j < r; ++j) v += M(i, j) * s[j];
      z[i] = v;
    }
    if (kern::norm4(z) == 4 * m) out.push_back(z);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LiftCtx {
  Alg sub;
  int d;
  std::map<std::tuple<std::vector<Rational>, I64>, std::vector<HOct>> shells;

  const std::vector<HOct>& shell(const Comp<Rational>& k, I64 m) {
    auto key = std::make_tuple(std::vector<Rational>(k.v.data(), k.v.data() + 8), m);
    auto it = shells.find(key);
    if (it == shells.end()) it = shells.emplace(key, coset_shell(sub, k, m)).first;
    return it->second;
  }
  bool proj_eq(const HOct& z, const HOct& target) const {
    for (int i = 0; i < d; ++i)
      if (z[i] != target[i]) return false;
    return true;
  }
};

bool doubled(const Comp<Rational>& z, HOct& out) {
  for (int i = 0; i < 8; ++i) {
    const Rational t = Rational(2) * z.v(i);
    if (!is_integer(t)) return false;
    out[i] = to_int64(t);
  }
  return true;
}

bool int_diag(const RJordan& X, std::array<I64, 3>& c) {
  for (int i = 0; i < 3; ++i) {
    if (!is_integer(X.c(i))) return false;
    c[i] = to_int64(X.c(i));
  }
  return true;
}

std::vector<HW> lifts_core(LiftCtx& ctx, const RFreud& x) {
  std::vector<HW> out;
  if (!is_integer(x.a) || !is_integer(x.d)) return out;
  const I64 a = to_int64(x.a), d = to_int64(x.d);
  const RJordan Bx = embed(x.b, Alg::theta0), Cx = embed(x.c, Alg::theta0);
  if (a != 0) {
    std::array<I64, 3> bc, cc;
    if (!int_diag(Bx, bc) || !int_diag(Cx, cc)) return out;
    std::array<const std::vector<HOct>*, 3> S;
    std::array<HOct, 3> target;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const I64 m = bc[j] * bc[k] - a * cc[i];
      if (m < 0) return out;
      S[i] = &ctx.shell(Bx.x[i], m);
      if (S[i]->empty()) return out;
      // pi(conj(z_j z_k)) = a pi(C_i) + B_ii pi(z_i)
      if (!doubled(Rational(a) * Cx.x[i] + Rational(bc[i]) * Bx.x[i], target[i])) return out;
    }
    for (const HOct& z2 : *S[1])
      for (const HOct& z3 : *S[2]) {
        if (!ctx.proj_eq(kern::conj(kern::mul(z2, z3)), target[0])) continue;
        for (const HOct& z1 : *S[0]) {
          if (!ctx.proj_eq(kern::conj(kern::mul(z3, z1)), target[1]) ||
              !ctx.proj_eq(kern::conj(kern::mul(z1, z2)), target[2]))
            continue;
          HJ B;
          B.c = bc;
          B.x = {z1, z2, z3};
          HW w;
          if (!hdivide(hadjoint(B), a, w.c)) continue;
          if (hnorm(B) != a * a * d) continue;
          w.a = a;
          w.b = B;
          w.d = d;
          out.push_back(w);
        }
      }
    return out;
  }
  if (d != 0) {
    for (const HW& w : lifts_core(ctx, flip(x))) out.push_back({w.d, w.c, w.b, w.a});
    return out;
  }
  // a = d = 0: b# = c# = 0 and (b, c) = 0.
  auto rank_le1 = [&](const RJordan& X) {
    std::vector<HJ> v;
    std::array<I64, 3> cd;
    if (!int_diag(X, cd)) return v;
    std::array<const std::vector<HOct>*, 3> S;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const I64 m = cd[j] * cd[k];
      if (m < 0) return v;
      S[i] = &ctx.shell(X.x[i], m);
      if (S[i]->empty()) return v;
    }
    for (const HOct& z2 : *S[1])
      for (const HOct& z3 : *S[2])
        for (const HOct& z1 : *S[0]) {
          HJ B;
          B.c = cd;
          B.x = {z1, z2, z3};
          if (hadjoint(B).is_zero()) v.push_back(B);
        }
    return v;
  };
  const std::vector<HJ> bs = rank_le1(Bx), cs = rank_le1(Cx);
  for (const HJ& b : bs)
    for (const HJ& c : cs)
      if (!(b.is_zero() && c.is_zero()) && hpair(b, c) == 0) out.push_back({0, b, c, 0});
  return out;
}

I64 tail_height(const HW& w, int d) {
  I64 h = 0;
  for (const HJ* X : {&w.b, &w.c})
    for (int i = 0; i < 3; ++i)
      for (int j = d; j < 8; ++j) h = std::max(h, ceil_half_abs(X->x[i][j]));
  return h;
}

}  // namespace

WEnum rank1_lifts(const RFreud& x, std::int64_t height) {
  const Alg sub = x.alg();
  if (sub == Alg::theta0) throw std::domain_error("lifts need a proper subalgebra");
  LiftCtx ctx{sub, dim(sub), {}};
  std::vector<RFreud> ws;
  std::uint64_t excluded = 0;
  for (const HW& h : lifts_core(ctx, x)) {
    if (height > 0 && tail_height(h, ctx.d) > height) {
      ++excluded;
      continue;
    }
    ws.push_back(to_rw(h));
  }
  WEnum r = finish(std::move(ws));
  r.excluded = excluded;
  r.complete = excluded == 0;
  return r;
}

WEnum rank1_sweep(Alg alg, std::int64_t height) {
  if (height < 1) throw std::domain_error("sweep height must be at least 1");
  const std::vector<RJordan> jb = jordan_lattice_basis(alg), db = dual_lattice_basis(alg);
  const int n = static_cast<int>(jb.size());
  double box = 1;
  for (int i = 0; i < n; ++i) box *= double(2 * height + 1);
  if (box > 2e6) throw std::domain_error("sweep box too large for this lattice and height");

  auto box_elements = [&](const std::vector<RJordan>& basis) {
    std::vector<RJordan> out;
    std::vector<I64> t(n, -height);
    while (true) {
      RJordan X(alg);
      for (int i = 0; i < n; ++i)
        if (t[i]) X = X + Rational(t[i]) * basis[i];
      out.push_back(std::move(X));
      int i = 0;
      while (i < n && t[i] == height) t[i++] = -height;
      if (i == n) break;
      ++t[i];
    }
    return out;
  };
  auto within = [&](const RFreud& w) { return is_integral(w) && height_w(w) <= height; };

  const std::vector<RJordan> bbox = box_elements(jb), cbox = box_elements(db);
  std::vector<RFreud> found;
  for (I64 a = -height; a <= height; ++a) {
    if (a == 0) continue;
    for (const RJordan& b : bbox) {
      const RJordan c = (Rational(1) / Rational(a)) * adjoint(b);
      const Rational d = cubic_norm(b) / Rational(a * a);
      RFreud w{Rational(a), b, c, d};
      if (within(w)) found.push_back(std::move(w));
    }
  }
  for (I64 d = -height; d <= height; ++d) {
    if (d == 0) continue;
    for (const RJordan& c : cbox) {
      RFreud w{Rational(0), (Rational(1) / Rational(d)) * adjoint(c), c, Rational(d)};
      if (rank_le1(w) && within(w)) found.push_back(std::move(w));
    }
  }
  std::vector<RJordan> bs, cs;
  for (const RJordan& b : bbox)
    if (adjoint(b).is_zero()) bs.push_back(b);
  for (const RJordan& c : cbox)
    if (adjoint(c).is_zero()) cs.push_back(c);
  for (const RJordan& b : bs)
    for (const RJordan& c : cs) {
      if (b.is_zero() && c.is_zero()) continue;
      if (trace_pair(b, c) == 0) found.push_back({Rational(0), b, c, Rational(0)});
    }
  return finish(std::move(found));
}

}  // namespace qmf
