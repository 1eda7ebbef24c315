#include "doctest.h"

#include "qmf/arith.hpp"
#include "qmf/cache.hpp"

#include <array>
#include <filesystem>
#include <fstream>

using namespace qmf;

namespace {

const Alg O = Alg::theta0;

// Rank-one w over H3(Q) with every lattice coordinate in {-1, 0, 1}, counted
// in plain integers.  b = [[b0, b5, b4], [b5, b1, b3], [b4, b3, b2]]; the dual
// coordinates of c are its diagonal and twice its off-diagonal entries, so
// C = 2c has diagonal 2s_i and off-diagonal s_{3+i}.
std::uint64_t brute_rank_one_rat() {
  auto adj = [](const std::array<std::int64_t, 6>& m) {
    // adjoint of the symmetric matrix (diag m0..m2, off m3 = (2,3), m4 = (3,1), m5 = (1,2))
    return std::array<std::int64_t, 6>{m[1] * m[2] - m[3] * m[3], m[2] * m[0] - m[4] * m[4],
                                       m[0] * m[1] - m[5] * m[5], m[4] * m[5] - m[0] * m[3],
                                       m[5] * m[3] - m[1] * m[4], m[3] * m[4] - m[2] * m[5]};
  };
  auto pair = [](const std::array<std::int64_t, 6>& x, const std::array<std::int64_t, 6>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + 2 * (x[3] * y[3] + x[4] * y[4] + x[5] * y[5]);
  };
  std::uint64_t count = 0;
  std::array<int, 14> t{};
  t.fill(-1);
  while (true) {
    const std::int64_t a = t[0], d = t[13];
    std::array<std::int64_t, 6> b, C;
    for (int i = 0; i < 6; ++i) b[i] = t[1 + i];
    for (int i = 0; i < 3; ++i) C[i] = 2 * t[7 + i];
    for (int i = 3; i < 6; ++i) C[i] = t[7 + i];
    bool nonzero = a || d;
    for (int i = 0; i < 6; ++i) nonzero = nonzero || b[i] || C[i];
    if (nonzero) {
      // b# = a c, c# = d b, (b, c) = 3ad, scaled by C = 2c.
      const auto bs = adj(b), Cs = adj(C);
      bool ok = pair(b, C) == 6 * a * d;
      for (int i = 0; i < 6 && ok; ++i) ok = 2 * bs[i] == a * C[i] && Cs[i] == 4 * d * b[i];
      count += ok;
    }
    int i = 0;
    while (i < 14 && t[i] == 1) t[i++] = -1;
    if (i == 14) break;
    ++t[i];
  }
  return count;
}

}  // namespace

TEST_CASE("rank-one positive elements with pairing 1 and 2 against I") {
  const RJordan I = identity<Rational>(O);
  const JordanEnum r1 = enum_rank1_psd_pairing(I, 1);
  CHECK(r1.count == 3);
  CHECK(r1.aggregate == 3);
  const JordanEnum r2 = enum_rank1_psd_pairing(I, 2);
  CHECK(r2.count == 723);
  CHECK(r2.aggregate == 747);
  CHECK(r2.by_content == std::map<std::int64_t, std::uint64_t>{{1, 720}, {2, 3}});
  CHECK(r2.complete);
  for (const RJordan& T : r2.elements) {
    REQUIRE(in_lattice(T));
    REQUIRE(rank_jordan(T) == 1);
    REQUIRE(is_psd(T));
    REQUIRE(trace_pair(T, I) == 2);
  }
  for (std::size_t i = 1; i < r2.elements.size(); ++i) {
    const RVec p = jordan_coords(r2.elements[i - 1]), q = jordan_coords(r2.elements[i]);
    REQUIRE(std::lexicographical_compare(p.data(), p.data() + p.size(), q.data(), q.data() + q.size()));
  }
  const JordanEnum agg = enum_rank1_psd_pairing(I, 2, false);
  CHECK(agg.elements.empty());
  CHECK(agg.count == 723);
  CHECK(agg.aggregate == 747);
}

TEST_CASE("histogram reconciles with the aggregate") {
  for (const RJordan& K : {identity<Rational>(O), class_E()})
    for (int n = 1; n <= 3; ++n) {
      const JordanEnum r = enum_rank1_psd_pairing(K, n, false);
      Integer s = 0;
      std::uint64_t c = 0;
      for (const auto& [d, k] : r.by_content) {
        s += sigma(3, d) * k;
        c += k;
        CHECK(n % d == 0);
      }
      CHECK(s == r.aggregate);
      CHECK(c == r.count);
    }
}

TEST_CASE("class E") {
  const RJordan E = class_E();
  CHECK(enum_rank1_psd_pairing(E, 1).count == 0);
  const JordanEnum r = enum_rank1_psd_pairing(E, 2);
  CHECK(r.aggregate == 819);
  for (const RJordan& T : r.elements) REQUIRE(trace_pair(T, E) == 2);
  CHECK_THROWS(enum_rank1_psd_pairing(diag<Rational>(O, 1, 1, 0), 1));
}

TEST_CASE("singleton fibers") {
  for (const RJordan& K : {identity<Rational>(O), class_E()}) {
    for (const auto& w0 : {std::array<Rational, 4>{1, 0, 0, 0}, std::array<Rational, 4>{0, 0, 0, 1}}) {
      const WEnum f = omega_fiber(K, w0, 10);
      REQUIRE(f.elements.size() == 1);
      const RFreud& w = f.elements[0];
      CHECK(w.a == w0[0]);
      CHECK(w.d == w0[3]);
      CHECK(w.b.is_zero());
      CHECK(w.c.is_zero());
      CHECK(f.complete);
    }
  }
}

TEST_CASE("fiber elements satisfy their predicate") {
  for (const RJordan& K : {identity<Rational>(O), class_E()})
    for (const auto& w0 : {std::array<Rational, 4>{2, 0, 0, 0}, std::array<Rational, 4>{0, Rational(1, 3), 0, 0},
                           std::array<Rational, 4>{0, 0, Rational(1, 3), 1}}) {
      const WEnum f = omega_fiber(K, w0, 2);
      for (const RFreud& w : f.elements) {
        REQUIRE(rank_w(w) == 1);
        REQUIRE(is_integral(w));
        REQUIRE(contract(w, K) == w0);
        REQUIRE(height_w(w) <= 2);
      }
    }
  CHECK_THROWS_AS(omega_fiber(identity<Rational>(O), {Rational(1, 2), 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(omega_fiber(identity<Rational>(O), {0, Rational(1, 6), 0, 0}), std::domain_error);
}

TEST_CASE("rank-one sweep over H3(Q) at height 1") {
  const WEnum s = rank1_sweep(Alg::rat, 1);
  CHECK(s.elements.size() == brute_rank_one_rat());
  CHECK(s.elements.size() == 272);
  RFreud ua(Alg::rat), ud(Alg::rat);
  ua.a = 1;
  ud.d = 1;
  auto has = [&](const RFreud& w) { return std::find(s.elements.begin(), s.elements.end(), w) != s.elements.end(); };
  CHECK(has(ua));
  CHECK(has(ud));
  for (const RFreud& w : s.elements) {
    REQUIRE(has(Rational(-1) * w));
    REQUIRE(is_integral(w));
    REQUIRE(quartic(w) == 0);
    REQUIRE(wflat(w).is_zero());
    REQUIRE(rank_w(w) == 1);
  }
  CHECK_THROWS(rank1_sweep(Alg::theta0, 1));
}

TEST_CASE("result cache") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("qmf-cache-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const ResultCache cache(dir);

  CHECK(ResultCache::key(json{{"x", 1}}) == ResultCache::key(json::parse("{ \"x\" : 1 }")));
  CHECK(ResultCache::key(json{{"x", 1}}) != ResultCache::key(json{{"x", 2}}));
  CHECK(spot_check_indices(0).empty());
  CHECK(spot_check_indices(3) == std::vector<std::size_t>{0});
  CHECK(spot_check_indices(723).size() == 8);

  const CachedResult first = cached_rank1_psd(&cache, "I", 2, true);
  CHECK_FALSE(first.hit);
  const fs::path file = cache.file_for(first.record.at("task"));
  CHECK(fs::exists(file));
  const CachedResult second = cached_rank1_psd(&cache, "I", 2, true);
  CHECK(second.hit);
  CHECK(second.record.dump() == first.record.dump());
  CHECK(cached_rank1_psd(nullptr, "I", 2, true).record.dump() == first.record.dump());
  for (const char* k : {"task", "elements", "aggregate", "complete", "version"}) CHECK(first.record.contains(k));

  // Corrupt the first element: the spot check must catch it and recompute.
  json rec = first.record;
  rec["elements"][0]["diag"][0] = "5";
  cache.store(rec);
  const CachedResult third = cached_rank1_psd(&cache, "I", 2, true);
  CHECK_FALSE(third.hit);
  CHECK(third.revalidated);
  CHECK(third.record.dump() == first.record.dump());

  const CachedResult f1 = cached_omega_fiber(&cache, "E", {0, 0, 0, 1}, 10);
  const CachedResult f2 = cached_omega_fiber(&cache, "E", {0, 0, 0, 1}, 10);
  CHECK(f2.hit);
  CHECK(f1.record.at("elements").size() == 1);
  CHECK_THROWS(class_rep("F"));
  fs::remove_all(dir);
}
