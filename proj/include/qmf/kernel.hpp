#pragma once

// Integer kernels for integral octonions.  An element x of theta0 has
// half-integral standard coordinates, so it is stored as D = 2x in int64.

#include "qmf/composition.hpp"

#include <array>
#include <cstdint>

namespace qmf::kern {

using HOct = std::array<std::int64_t, 8>;

inline void qm(const std::int64_t* a, const std::int64_t* b, std::int64_t* r) {
  r[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  r[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
}

// Raw Cayley-Dickson product of the stored vectors, i.e. 4 * (x y).
inline HOct raw_mul(const HOct& x, const HOct& y) {
  const std::int64_t dc[4] = {y[4], -y[5], -y[6], -y[7]};
  const std::int64_t cc[4] = {y[0], -y[1], -y[2], -y[3]};
  std::int64_t t1[4], t2[4], t3[4], t4[4];
  qm(x.data(), y.data(), t1);
  qm(dc, x.data() + 4, t2);
  qm(y.data() + 4, x.data(), t3);
  qm(x.data() + 4, cc, t4);
  HOct r;
  for (int i = 0; i < 4; ++i) {
    r[i] = t1[i] - t2[i];
    r[i + 4] = t3[i] + t4[i];
  }
  return r;
}

// Doubled coordinates of x y; exact whenever x y is integral.
inline HOct mul(const HOct& x, const HOct& y) {
  HOct r = raw_mul(x, y);
  for (auto& t : r) t /= 2;
  return r;
}

inline HOct conj(const HOct& x) {
  HOct r;
  r[0] = x[0];
  for (int i = 1; i < 8; ++i) r[i] = -x[i];
  return r;
}

inline std::int64_t dot(const HOct& x, const HOct& y) {
  std::int64_t s = 0;
  for (int i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}
// 4 n(x)
inline std::int64_t norm4(const HOct& x) { return dot(x, x); }

inline HOct add(const HOct& x, const HOct& y) {
  HOct r;
  for (int i = 0; i < 8; ++i) r[i] = x[i] + y[i];
  return r;
}
inline HOct sub(const HOct& x, const HOct& y) {
  HOct r;
  for (int i = 0; i < 8; ++i) r[i] = x[i] - y[i];
  return r;
}
inline HOct scale(std::int64_t s, const HOct& x) {
  HOct r;
  for (int i = 0; i < 8; ++i) r[i] = s * x[i];
  return r;
}
inline bool is_zero(const HOct& x) {
  for (auto t : x)
    if (t) return false;
  return true;
}

HOct from_comp(const Comp<Rational>& x);
Comp<Rational> to_comp(const HOct& x, Alg a = Alg::theta0);

// Order coordinates (theta0 basis) of a doubled vector, when integral.
bool order_coords(const HOct& x, std::array<std::int64_t, 8>& t);
HOct from_order_coords(const std::int64_t* t);

}  // namespace qmf::kern
