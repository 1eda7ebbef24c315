#include "doctest.h"

#include "cli.hpp"
#include "qmf/embeddings.hpp"
#include "qmf/json_io.hpp"
#include "qmf/sampling.hpp"

#include <filesystem>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace qmf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "freudenthal");
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

fs::path temp_cache() {
  static int k = 0;
  const fs::path p = fs::temp_directory_path() / ("qmf-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(k++));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("documented examples") {
  const Run r = run({"--no-cache", "w", "rank", R"({"a":0,"b":0,"c":0,"d":1})"});
  CHECK(r.rc == 0);
  CHECK(r.j() == json{{"rank", 1}});

  const Run k = run({"--no-cache", "identity", "kim-theta", "--n", "1"});
  REQUIRE(k.rc == 0);
  const json kj = k.j();
  CHECK(kj["sum_I"] == 3);
  CHECK(kj["sum_E"] == 0);
  CHECK(kj["lhs"] == 3);
  CHECK(kj["rhs"] == 3);
  CHECK(kj["ok"] == true);

  const Run a = run({"arch", "intertwiner", "--s", "5"});
  REQUIRE(a.rc == 0);
  CHECK(a.j()["A"] == 0);
}

TEST_CASE("element subcommands") {
  CHECK(run({"oct", "norm", R"({"algebra":"theta0","coords":[1,0,0,0,0,0,0,0]})"}).j()["value"] == 1);
  CHECK(run({"oct", "enum-norm", "--algebra", "theta0", "--m", "1"}).j()["count"] == 240);
  CHECK(run({"oct", "enum-norm", "--algebra", "hurwitz", "--m", "1"}).j()["count"] == 24);
  CHECK(run({"jordan", "norm", "I"}).j()["norm"] == 1);
  CHECK(run({"jordan", "rank", "E"}).j()["rank"] == 3);
  CHECK(run({"jordan", "rank", R"({"diag":[1,0,0]})"}).j()["rank"] == 1);
  CHECK(run({"w", "quartic", R"({"d":1,"b":1})"}).j()["quartic"] == 4);
  CHECK(run({"w", "symp", R"({"a":1})", R"({"d":1})"}).rc == 0);
  CHECK(run({"coeff", "kim", R"({"diag":[1,0,0]})"}).j()["value"] == 1);
  CHECK(run({"coeff", "theta", R"({"d":3})"}).j()["value"] == 82);
  CHECK(run({"--no-cache", "coeff", "fdelta", "--omega0", "0,1/3,0,0"}).j()["value"] == 3);
  const json b = run({"arch", "bessel", "--v", "0", "--y", "1"}).j();
  CHECK(b["op"] == "bessel");
  CHECK(b["value"].get<double>() == doctest::Approx(std::cyl_bessel_k(0.0, 1.0)).epsilon(1e-12));
  CHECK(run({"arch", "poly-id", "--n", "4"}).rc == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"bogus"}).rc == 2);
  CHECK(run({"w", "rank"}).rc == 2);
  CHECK(run({"w", "rank", "{not json"}).rc == 2);
  CHECK(run({"--format", "xml", "jordan", "norm", "I"}).rc == 2);
  CHECK(run({"--height", "-1", "jordan", "norm", "I"}).rc == 2);
  CHECK(run({"oct", "mul", R"({"algebra":"gauss","coords":[1,0]})",
             R"({"algebra":"hurwitz","coords":[1,0,0,0]})"})
            .rc == 1);
  CHECK(run({"arch", "bessel", "--v", "0", "--y", "0"}).rc == 1);
  CHECK(run({"--no-cache", "enum", "fiber", "--class", "I", "--omega0", "1/2,0,0,0"}).rc == 1);
  CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("csv output") {
  const Run r = run({"--format", "csv", "w", "rank", R"({"d":1})"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("rank,1") != std::string::npos);
}

TEST_CASE("cache and byte stability") {
  const fs::path dir = temp_cache();
  const std::vector<std::string> args{"--cache-dir", dir.string(), "enum", "rank1-psd", "--pairing", "I", "--value", "2"};
  const Run first = run(args);
  REQUIRE(first.rc == 0);
  CHECK(first.j()["count"] == 723);
  CHECK(first.j()["aggregate"] == 747);
  CHECK(!fs::is_empty(dir));
  const Run second = run(args);
  CHECK(second.out == first.out);
  CHECK(second.err.find("cache") != std::string::npos);
  const Run fiber1 = run({"--cache-dir", dir.string(), "enum", "fiber", "--class", "E", "--omega0", "0,0,0,1"});
  const Run fiber2 = run({"--cache-dir", dir.string(), "enum", "fiber", "--class", "E", "--omega0", "0,0,0,1"});
  CHECK(fiber1.rc == 0);
  CHECK(fiber1.out == fiber2.out);
  CHECK(fiber1.j()["count"] == 1);
  fs::remove_all(dir);
}

TEST_CASE("element JSON roundtrips") {
  std::mt19937_64 rng(3);
  for (Alg a : {Alg::rat, Alg::gauss, Alg::hurwitz, Alg::theta0}) {
    for (int i = 0; i < 20; ++i) {
      const Comp<Rational> x = random_order_element(a, rng, 3);
      CHECK(comp_from_json(json::parse(to_json(x).dump())) == x);
      const RJordan X = random_dual_jordan(a, rng, 2);
      CHECK(jordan_from_json(json::parse(to_json(X).dump())) == X);
      const RFreud w = random_integral_w(a, rng, 2);
      CHECK(freud_from_json(json::parse(to_json(w).dump())) == w);
    }
  }
  const TitsSplit t = distinguished_witness();
  const TitsSplit t2 = tits_split_from_json(to_json(t));
  CHECK(tits_embed(t2) == tits_embed(t));
  const CDSplit c = cd_split(random_integral_w(Alg::theta0, rng, 1));
  CHECK(cd_embed(cd_split_from_json(to_json(c))) == cd_embed(c));
  CHECK(rational_from_json("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(rational_from_json(0.5), std::invalid_argument);
  CHECK(parse_quad("1,0,1/3,-2")[3] == -2);
  CHECK_THROWS_AS(parse_quad("1,2,3"), std::invalid_argument);
}
