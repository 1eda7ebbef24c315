#include "qmf/freudenthal.hpp"

namespace qmf {

RVec w_coords(const RFreud& w) {
  const RVec jb = jordan_coords(w.b), jc = dual_coords(w.c);
  RVec t(jb.size() + jc.size() + 2);
  t(0) = w.a;
  t.segment(1, jb.size()) = jb;
  t.segment(1 + jb.size(), jc.size()) = jc;
  t(t.size() - 1) = w.d;
  return t;
}

bool is_integral(const RFreud& w) {
  const RVec t = w_coords(w);
  for (int i = 0; i < t.size(); ++i)
    if (!is_integer(t(i))) return false;
  return true;
}

Integer content_w(const RFreud& w) {
  if (w.is_zero()) throw std::domain_error("content of zero element");
  const RVec t = w_coords(w);
  Integer g = 0;
  for (int i = 0; i < t.size(); ++i) {
    if (!is_integer(t(i))) throw std::domain_error("element is not integral");
    g = boost::integer::gcd(g, Integer(abs(mp::numerator(t(i)))));
  }
  return g;
}

Integer height_w(const RFreud& w) {
  const RVec t = w_coords(w);
  Integer h = 0;
  for (int i = 0; i < t.size(); ++i) {
    const Rational a = abs(t(i));
    Integer up = mp::numerator(a) / mp::denominator(a);
    if (up * mp::denominator(a) != mp::numerator(a)) up += 1;
    h = std::max(h, up);
  }
  return h;
}

}  // namespace qmf
