#include "cli.hpp"

#include "qmf/acceptance.hpp"
#include "qmf/archimedean.hpp"
#include "qmf/cache.hpp"
#include "qmf/coefficients.hpp"
#include "qmf/json_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace qmf {

namespace {

// Integral values that fit in int64 print as numbers, everything else as "p/q".
json scalar_json(const Rational& q) {
  if (is_integer(q)) {
    const Integer n = mp::numerator(q);
    if (n <= Integer(INT64_MAX) && n >= Integer(INT64_MIN)) return n.convert_to<std::int64_t>();
  }
  return to_string(q);
}

json integer_json(const Integer& n) { return scalar_json(Rational(n)); }

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    out << "path,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

json quad_json(const std::array<Rational, 4>& q) {
  json a = json::array();
  for (const auto& r : q) a.push_back(to_json(r));
  return a;
}

json coeff_json(const json& query, const CoeffResult& r, bool witnesses) {
  json j = {{"query", query}, {"value", integer_json(r.value)}, {"complete", r.complete}};
  if (witnesses) {
    json w = json::array();
    for (const auto& x : r.witnesses) w.push_back(to_json(x));
    j["witnesses"] = w;
  }
  return j;
}

struct Opts {
  std::string cache_dir, format = "json";
  std::int64_t height = 0;
  std::uint64_t seed = 1729;
  bool no_cache = false;
  std::vector<std::string> inputs;
  std::string algebra = "theta0", pairing = "I", omega0, t = "1,1,1", lambda = "1", s;
  std::int64_t m = 1, value = 1, n = 4;
  int v = 0;
  double y = 1;
  bool elements = false, witnesses = false, fast = false;
  std::vector<int> only;
};

json need(const Opts& o, std::size_t k) {
  if (o.inputs.size() != k)
    throw std::invalid_argument("expected " + std::to_string(k) + " input payload" + (k == 1 ? "" : "s"));
  json a = json::array();
  for (const auto& s : o.inputs) a.push_back(read_payload(s));
  return a;
}

json oct_json(const Opts& o, const std::string& op) {
  if (op == "enum-norm") {
    const Alg a = parse_alg(o.algebra);
    const auto shell = enumerate_norm(a, o.m);
    json j = {{"algebra", o.algebra}, {"m", o.m}, {"count", shell.size()}};
    if (o.elements) {
      json e = json::array();
      for (const auto& x : shell) e.push_back(to_json(x));
      j["elements"] = e;
    }
    return j;
  }
  if (op == "mul") {
    const json in = need(o, 2);
    return {{"value", to_json(mul(comp_from_json(in[0]), comp_from_json(in[1])))}};
  }
  const Comp<Rational> x = comp_from_json(need(o, 1)[0]);
  if (op == "norm") return {{"value", scalar_json(norm(x))}};
  return {{"value", to_json(conj(x))}};
}

json jordan_json(const Opts& o, const std::string& op) {
  const RJordan X = jordan_from_json(need(o, 1)[0]);
  if (op == "norm") return {{"norm", scalar_json(cubic_norm(X))}};
  if (op == "adjoint") return {{"adjoint", to_json(adjoint(X))}};
  if (op == "rank") return {{"rank", rank_jordan(X)}};
  if (op == "psd") return {{"psd", is_psd(X)}, {"positive_definite", is_positive_definite(X)}};
  return {{"content", integer_json(content_jordan(X))}};
}

json w_json(const Opts& o, const std::string& op) {
  if (op == "symp") {
    const json in = need(o, 2);
    return {{"symp", scalar_json(symp(freud_from_json(in[0]), freud_from_json(in[1])))}};
  }
  const RFreud w = freud_from_json(need(o, 1)[0]);
  if (op == "rank") return {{"rank", rank_w(w)}};
  if (op == "quartic") return {{"quartic", scalar_json(quartic(w))}};
  if (op == "flat") return {{"flat", to_json(wflat(w))}};
  if (!is_integral(w)) throw std::domain_error("element is not integral");
  return {{"content", integer_json(content_w(w))}};
}

json enum_json(const Opts& o, const std::string& op, const ResultCache* cache, std::ostream& err) {
  CachedResult r;
  if (op == "rank1-psd") {
    if (o.value < 1) throw std::domain_error("pairing value must be positive");
    r = cached_rank1_psd(cache, o.pairing, o.value, o.elements);
  } else {
    if (o.omega0.empty()) throw std::invalid_argument("--omega0 is required");
    r = cached_omega_fiber(cache, o.pairing, parse_quad(o.omega0), o.height);
  }
  if (r.hit) err << "cache hit: " << cache->file_for(r.record.at("task")).string() << '\n';
  if (r.revalidated) err << "cache entry failed its spot check and was recomputed\n";
  json j = std::move(r.record);
  j["aggregate"] = integer_json(Integer(j.at("aggregate").get<std::string>()));
  if (!o.elements && op == "fiber") j.erase("elements");
  if (op == "rank1-psd" && !o.elements) j.erase("elements");
  return j;
}

json coeff_json_for(const Opts& o, const std::string& op) {
  if (op == "fdelta") {
    if (o.omega0.empty()) throw std::invalid_argument("--omega0 is required");
    const auto q = parse_quad(o.omega0);
    return coeff_json(quad_json(q), fdelta_coeff(q, o.height), o.witnesses);
  }
  const json in = need(o, 1)[0];
  if (op == "kim") {
    const RJordan T = jordan_from_json(in);
    return {{"query", to_json(T)}, {"value", scalar_json(kim_coeff(T))}, {"complete", true}};
  }
  const RFreud w = freud_from_json(in);
  if (op == "theta") return {{"query", to_json(w)}, {"value", integer_json(a_theta(w))}, {"complete", true}};
  if (op == "e7") return coeff_json(to_json(w), e7_pullback_coeff(w, o.height), o.witnesses);
  return coeff_json(to_json(w), e6_pullback_coeff(w, o.height), o.witnesses);
}

json identity_json(const Opts& o) {
  if (o.n < 0 || o.n > 12) throw std::domain_error("n must lie in 0..12");
  const KimTheta k = kim_theta_identity(static_cast<int>(o.n));
  return {{"n", k.n},
          {"sum_I", scalar_json(k.sum_I)},
          {"sum_E", scalar_json(k.sum_E)},
          {"lhs", scalar_json(k.lhs)},
          {"rhs", scalar_json(k.rhs)},
          {"weighted", scalar_json(k.weighted)},
          {"weighted_expected", scalar_json(k.weighted_expected)},
          {"ok", k.ok}};
}

json arch_json(const Opts& o, const std::string& op) {
  if (op == "bessel") {
    return {{"op", op}, {"inputs", {{"v", o.v}, {"y", o.y}}}, {"value", kbessel(o.v, o.y)}, {"tolerance_used", 1e-10}};
  }
  if (op == "whittaker") {
    if (std::abs(o.v) > o.n) throw std::domain_error("|v| must not exceed n");
    const RFreud w = freud_from_json(need(o, 1)[0]);
    Torus<Rational> g;
    g.lambda = parse_rational(o.lambda);
    std::stringstream ts(o.t);
    std::string tok;
    int i = 0;
    while (std::getline(ts, tok, ',')) {
      if (i == 3) throw std::invalid_argument("--t takes three rationals");
      g.t(i++) = parse_rational(tok);
    }
    if (i != 3) throw std::invalid_argument("--t takes three rationals");
    const auto p = whittaker_pairing(w, g);
    const auto z = whittaker(w, static_cast<int>(o.n), o.v, g);
    return {{"op", op},
            {"inputs", {{"w", to_json(w)}, {"n", o.n}, {"v", o.v}, {"lambda", o.lambda}, {"t", o.t}}},
            {"pairing", {{"re", p.real()}, {"im", p.imag()}}},
            {"value", {{"re", z.real()}, {"im", z.imag()}}},
            {"tolerance_used", 1e-10}};
  }
  if (op == "f0") {
    const SpecialValue sv = f0_special(static_cast<int>(o.n));
    return {{"op", op},
            {"inputs", {{"n", o.n}}},
            {"value",
             {{"rational_part", scalar_json(sv.rational_part)},
              {"closed_form", sv.value},
              {"quadrature", sv.quadrature},
              {"monomial", {{"x", o.n}, {"y", o.n}}}}},
            {"tolerance_used", 1e-8}};
  }
  if (op == "poly-id") {
    const int n = static_cast<int>(o.n);
    return {{"op", op}, {"inputs", {{"n", n}}}, {"value", poly_identity_check(n)}, {"tolerance_used", 0}};
  }
  if (o.s.empty()) throw std::invalid_argument("--s is required");
  std::optional<Rational> exact;
  double s = 0;
  try {
    exact = parse_rational(o.s);
    s = to_double(*exact);
  } catch (const std::invalid_argument&) {
    s = std::stod(o.s);
  }
  const IntertwinerData d = intertwiner_data(s, exact);
  json m = json::array();
  for (const auto& row : d.matrix) {
    json r = json::array();
    for (const auto& x : row) r.push_back(scalar_json(x));
    m.push_back(r);
  }
  json j = {{"op", op}, {"inputs", {{"s", o.s}}}, {"Z", d.Z}, {"cf", d.cf}, {"basis_change", m}};
  j["A"] = d.A_exact ? scalar_json(*d.A_exact) : json(d.A);
  j["value"] = j["A"];
  j["tolerance_used"] = d.A_exact ? 0.0 : 1e-12;
  return j;
}

json suite_json(const Opts& o, std::ostream& err, bool& all_pass) {
  SuiteOptions so;
  so.fast = o.fast;
  so.seed = o.seed;
  so.only = o.only;
  json rows = json::array();
  all_pass = true;
  run_acceptance(so, [&](const Criterion& c) {
    err << (c.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.title << " (" << c.seconds << "s)\n";
    all_pass = all_pass && c.pass;
    rows.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  });
  return {{"fast", o.fast}, {"seed", o.seed}, {"criteria", rows}, {"pass", all_pass}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on octonions, the Albert algebra and its Freudenthal space"};
  app.name("freudenthal");
  app.fallthrough();
  app.require_subcommand(1);
  Opts o;
  app.add_option("--cache-dir", o.cache_dir, "enumeration cache directory");
  app.add_flag("--no-cache", o.no_cache, "skip the enumeration cache");
  app.add_option("--height", o.height, "height bound (0: none)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "seed for randomized subsets");

  std::function<json()> action;
  bool suite_pass = true;
  const ResultCache* cache_ptr = nullptr;
  std::optional<ResultCache> cache;

  auto group = [&](const char* name, const char* desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* g, const std::string& name, const char* desc, std::function<json()> h) {
    CLI::App* s = g->add_subcommand(name, desc);
    s->callback([&action, h] { action = h; });
    return s;
  };
  auto payload = [&](CLI::App* s, const char* what) {
    s->add_option("input", o.inputs, what)->expected(0, 2);
  };

  CLI::App* oct = group("oct", "composition algebra elements");
  for (const std::string op : {"mul", "norm", "conj"})
    payload(leaf(oct, op, "", [&o, op] { return oct_json(o, op); }), "element JSON (inline, path or -)");
  {
    CLI::App* s = leaf(oct, "enum-norm", "order elements of norm m", [&o] { return oct_json(o, "enum-norm"); });
    s->add_option("--algebra", o.algebra)->check(CLI::IsMember({"rat", "gauss", "hurwitz", "theta0"}));
    s->add_option("--m", o.m)->required();
    s->add_flag("--elements", o.elements, "list the elements");
  }

  CLI::App* jo = group("jordan", "elements of H3(C)");
  for (const std::string op : {"norm", "adjoint", "rank", "psd", "content"})
    payload(leaf(jo, op, "", [&o, op] { return jordan_json(o, op); }), "Jordan JSON");

  CLI::App* wg = group("w", "elements of the Freudenthal space");
  for (const std::string op : {"rank", "quartic", "flat", "content", "symp"})
    payload(leaf(wg, op, "", [&o, op] { return w_json(o, op); }), "Freudenthal JSON");

  CLI::App* en = group("enum", "cached enumerations");
  {
    CLI::App* s = leaf(en, "rank1-psd", "rank-one T >= 0 with (T, K) = n",
                       [&] { return enum_json(o, "rank1-psd", cache_ptr, err); });
    s->add_option("--pairing", o.pairing)->check(CLI::IsMember({"I", "E"}));
    s->add_option("--value", o.value)->required();
    s->add_flag("--elements", o.elements, "keep and print the elements");
    CLI::App* f = leaf(en, "fiber", "Omega_K(omega0)", [&] { return enum_json(o, "fiber", cache_ptr, err); });
    f->add_option("--class", o.pairing)->check(CLI::IsMember({"I", "E"}));
    f->add_option("--omega0", o.omega0, "a,b,c,d")->required();
    f->add_flag("--elements", o.elements, "print the elements");
  }

  CLI::App* co = group("coeff", "Fourier coefficients");
  for (const std::string op : {"theta", "kim", "e7", "e6"}) {
    CLI::App* s = leaf(co, op, "", [&o, op] { return coeff_json_for(o, op); });
    payload(s, "element JSON");
    if (op == "e7" || op == "e6") s->add_flag("--witnesses", o.witnesses);
  }
  {
    CLI::App* s = leaf(co, "fdelta", "", [&o] { return coeff_json_for(o, "fdelta"); });
    s->add_option("--omega0", o.omega0, "a,b,c,d")->required();
    s->add_flag("--witnesses", o.witnesses);
  }

  CLI::App* id = group("identity", "finite identities");
  leaf(id, "kim-theta", "sum_I(n) - sum_E(n) = 3 tau(n)", [&o] { return identity_json(o); })
      ->add_option("--n", o.n)
      ->required();

  CLI::App* ar = group("arch", "archimedean data");
  {
    CLI::App* b = leaf(ar, "bessel", "K_v(y)", [&o] { return arch_json(o, "bessel"); });
    b->add_option("--v", o.v)->required();
    b->add_option("--y", o.y)->required();
    CLI::App* w = leaf(ar, "whittaker", "", [&o] { return arch_json(o, "whittaker"); });
    payload(w, "Freudenthal JSON");
    w->add_option("--n", o.n);
    w->add_option("--v", o.v);
    w->add_option("--lambda", o.lambda);
    w->add_option("--t", o.t, "t1,t2,t3");
    leaf(ar, "f0", "", [&o] { return arch_json(o, "f0"); })->add_option("--n", o.n)->required();
    leaf(ar, "poly-id", "", [&o] { return arch_json(o, "poly-id"); })->add_option("--n", o.n)->required();
    leaf(ar, "intertwiner", "", [&o] { return arch_json(o, "intertwiner"); })->add_option("--s", o.s)->required();
  }

  CLI::App* su = group("suite", "batch runs");
  {
    CLI::App* s = leaf(su, "acceptance", "acceptance criteria 1..10", [&] { return suite_json(o, err, suite_pass); });
    s->add_flag("--fast", o.fast, "reduced bounds");
    s->add_option("--only", o.only, "criterion ids");
  }

  try {
    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (!o.no_cache) {
      cache.emplace(o.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(o.cache_dir));
      cache_ptr = &*cache;
    }
    const json result = action();
    emit(result, o.format, out);
    return suite_pass ? 0 : 1;
  } catch (const algebra_mismatch& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qmf
