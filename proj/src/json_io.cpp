#include "qmf/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace qmf {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) throw std::invalid_argument("rationals must be integers or \"p/q\" strings");
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

namespace {

Alg alg_of(const json& j, Alg fallback) {
  if (j.is_object() && j.contains("algebra")) return parse_alg(j.at("algebra").get<std::string>());
  return fallback;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Comp<Rational>& x) {
  const RVec t = order_coords(x);
  json coords = json::array();
  for (int i = 0; i < t.size(); ++i) coords.push_back(to_json(t(i)));
  return {{"algebra", std::string(alg_name(x.alg))}, {"coords", coords}};
}

Comp<Rational> comp_from_json(const json& j, Alg fallback) {
  if (j.is_number_integer() || j.is_string()) return scalar(fallback, rational_from_json(j));
  const Alg a = alg_of(j, fallback);
  const json& c = field(j, "coords");
  if (!c.is_array() || static_cast<int>(c.size()) != dim(a))
    throw std::invalid_argument("coords must have " + std::to_string(dim(a)) + " entries for " +
                                std::string(alg_name(a)));
  RVec t(dim(a));
  for (int i = 0; i < dim(a); ++i) t(i) = rational_from_json(c[i]);
  return from_order_coords(a, t);
}

json to_json(const RJordan& X) {
  json diag = json::array(), off = json::array();
  for (int i = 0; i < 3; ++i) {
    diag.push_back(to_json(X.c(i)));
    off.push_back(to_json(X.x[i]));
  }
  return {{"algebra", std::string(alg_name(X.alg))}, {"diag", diag}, {"off", off}};
}

RJordan jordan_from_json(const json& j, Alg fallback) {
  if (j.is_string() && j.get<std::string>() == "I") return identity<Rational>(Alg::theta0);
  if (j.is_string() && j.get<std::string>() == "E") return class_E();
  if (j.is_number_integer() || j.is_string()) {
    const Rational s = rational_from_json(j);
    return s * identity<Rational>(fallback);
  }
  const Alg a = alg_of(j, fallback);
  RJordan X(a);
  const json& d = field(j, "diag");
  if (!d.is_array() || d.size() != 3) throw std::invalid_argument("diag must have 3 entries");
  for (int i = 0; i < 3; ++i) X.c(i) = rational_from_json(d[i]);
  if (j.contains("off")) {
    const json& o = j.at("off");
    if (!o.is_array() || o.size() != 3) throw std::invalid_argument("off must have 3 entries");
    for (int i = 0; i < 3; ++i) {
      X.x[i] = comp_from_json(o[i], a);
      check_same(X.x[i].alg, a);
    }
  }
  return X;
}

json to_json(const RFreud& w) {
  return {{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"c", to_json(w.c)}, {"d", to_json(w.d)}};
}

RFreud freud_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("Freudenthal element must be an object");
  Alg a = alg_of(j, Alg::theta0);
  // Without an explicit algebra, take it from whichever Jordan slot names one.
  if (!j.contains("algebra"))
    for (const char* k : {"b", "c"})
      if (j.contains(k) && j.at(k).is_object() && j.at(k).contains("algebra")) {
        a = parse_alg(j.at(k).at("algebra").get<std::string>());
        break;
      }
  RFreud w(a);
  w.a = j.contains("a") ? rational_from_json(j.at("a")) : Rational(0);
  w.d = j.contains("d") ? rational_from_json(j.at("d")) : Rational(0);
  if (j.contains("b")) w.b = jordan_from_json(j.at("b"), a);
  if (j.contains("c")) w.c = jordan_from_json(j.at("c"), a);
  check_same(w.b.alg, w.c.alg);
  return w;
}

json to_json(const GaussMat& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& z : r) row.push_back(to_json(z));
    rows.push_back(row);
  }
  return rows;
}

GaussMat gauss_mat_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return gauss_scalar(scalar(Alg::gauss, rational_from_json(j)));
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3x3 matrix");
  GaussMat m = gauss_zero();
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw std::invalid_argument("expected a 3x3 matrix");
    for (int c = 0; c < 3; ++c) {
      m[r][c] = comp_from_json(j[r][c], Alg::gauss);
      check_same(m[r][c].alg, Alg::gauss);
    }
  }
  return m;
}

json to_json(const CDSplit& e) {
  json tb = json::array(), tc = json::array();
  for (int i = 0; i < 3; ++i) {
    tb.push_back(to_json(e.tail_b[i]));
    tc.push_back(to_json(e.tail_c[i]));
  }
  return {{"base", to_json(e.base)}, {"tail", {{"b", tb}, {"c", tc}}}};
}

CDSplit cd_split_from_json(const json& j) {
  CDSplit e;
  e.base = freud_from_json(field(j, "base"));
  check_same(e.base.alg(), Alg::hurwitz);
  const json& t = field(j, "tail");
  for (int i = 0; i < 3; ++i) {
    e.tail_b[i] = comp_from_json(field(t, "b").at(i), Alg::hurwitz);
    e.tail_c[i] = comp_from_json(field(t, "c").at(i), Alg::hurwitz);
    check_same(e.tail_b[i].alg, Alg::hurwitz);
    check_same(e.tail_c[i].alg, Alg::hurwitz);
  }
  return e;
}

json to_json(const TitsSplit& e) {
  return {{"base", to_json(e.base)}, {"tail", json::array({to_json(e.eta1), to_json(e.eta2)})}};
}

TitsSplit tits_split_from_json(const json& j) {
  TitsSplit e;
  e.base = freud_from_json(field(j, "base"));
  check_same(e.base.alg(), Alg::gauss);
  const json& t = field(j, "tail");
  if (!t.is_array() || t.size() != 2) throw std::invalid_argument("tail must be [eta1, eta2]");
  e.eta1 = gauss_mat_from_json(t[0]);
  e.eta2 = gauss_mat_from_json(t[1]);
  return e;
}

json to_json(const JordanEnum& r) {
  json els = json::array();
  for (const auto& T : r.elements) els.push_back(to_json(T));
  json hist = json::object();
  for (const auto& [d, k] : r.by_content) hist[std::to_string(d)] = k;
  return {{"elements", els},
          {"count", r.count},
          {"aggregate", r.aggregate.str()},
          {"by_content", hist},
          {"complete", r.complete}};
}

json to_json(const WEnum& r) {
  json els = json::array();
  for (const auto& w : r.elements) els.push_back(to_json(w));
  return {{"elements", els},
          {"count", r.elements.size()},
          {"aggregate", r.aggregate.str()},
          {"complete", r.complete},
          {"excluded", r.excluded}};
}

std::array<Rational, 4> parse_quad(const std::string& s) {
  std::array<Rational, 4> q;
  std::stringstream in(s);
  std::string tok;
  int i = 0;
  while (std::getline(in, tok, ',')) {
    if (i == 4) throw std::invalid_argument("expected four comma-separated rationals");
    q[i++] = parse_rational(tok);
  }
  if (i != 4) throw std::invalid_argument("expected four comma-separated rationals");
  return q;
}

json read_payload(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw std::invalid_argument("cannot read " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else if (arg == "I" || arg == "E") {
    return arg;
  } else {
    text = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // A plain path is accepted as well as @path.
    if (arg != "-" && (arg.empty() || arg[0] != '@')) {
      std::ifstream f(arg);
      if (f) return read_payload("@" + arg);
    }
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace qmf
