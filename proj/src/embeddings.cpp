#include "qmf/embeddings.hpp"

namespace qmf {

namespace {

RJordan cd_slot(const RJordan& base, const std::array<Comp<Rational>, 3>& tail) {
  RJordan X = embed(base, Alg::theta0);
  for (int i = 0; i < 3; ++i) {
    check_same(tail[i].alg, Alg::hurwitz);
    X.x[i].v.tail(4) = tail[i].v.head(4);
  }
  return X;
}

std::array<Comp<Rational>, 3> cd_tail(const RJordan& X) {
  std::array<Comp<Rational>, 3> t{Comp<Rational>(Alg::hurwitz), Comp<Rational>(Alg::hurwitz),
                                  Comp<Rational>(Alg::hurwitz)};
  for (int i = 0; i < 3; ++i) t[i].v.head(4) = X.x[i].v.tail(4);
  return t;
}

}  // namespace

RFreud cd_embed(const CDSplit& e) {
  check_same(e.base.alg(), Alg::hurwitz);
  return {e.base.a, cd_slot(e.base.b, e.tail_b), cd_slot(e.base.c, e.tail_c), e.base.d};
}

CDSplit cd_split(const RFreud& w) {
  check_same(w.alg(), Alg::theta0);
  CDSplit e;
  e.base = {w.a, project(w.b, Alg::hurwitz), project(w.c, Alg::hurwitz), w.d};
  e.tail_b = cd_tail(w.b);
  e.tail_c = cd_tail(w.c);
  return e;
}

Rational cd_tail_symp(const CDSplit& e, const CDSplit& f) {
  Rational s = 0;
  for (int i = 0; i < 3; ++i)
    s += trace_form(e.tail_c[i], f.tail_b[i]) - trace_form(e.tail_b[i], f.tail_c[i]);
  return s;
}

RFreud tits_embed(const TitsSplit& e) {
  check_same(e.base.alg(), Alg::gauss);
  return {e.base.a, tits_assemble({e.base.b, e.eta1}), tits_assemble({e.base.c, e.eta2}), e.base.d};
}

TitsSplit tits_split_w(const RFreud& w) {
  const TitsElement b = tits_split(w.b), c = tits_split(w.c);
  TitsSplit e;
  e.base = {w.a, b.base, c.base, w.d};
  e.eta1 = b.tail;
  e.eta2 = c.tail;
  return e;
}

TitsSplit distinguished_witness() {
  Comp<Rational> kappa(Alg::gauss);
  kappa.v(1) = 2;
  TitsSplit e;
  e.base = {Rational(0), identity<Rational>(Alg::gauss), RJordan(Alg::gauss),
            norm(kappa) * Rational(-1, 4)};  // kappa^2 = -n(kappa)
  e.eta1 = gauss_scalar(one<Rational>(Alg::gauss));
  e.eta2 = gauss_scalar(Rational(-1, 2) * kappa);
  return e;
}

}  // namespace qmf
