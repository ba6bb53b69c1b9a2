#include "cli_harness.hpp"
#include "nazeta/cache.hpp"
#include "nazeta/json_io.hpp"

#include <doctest.h>

using harness::run;
using nazeta::json;

TEST_CASE("curve from a hyperelliptic equation") {
  const auto r = run({"--no-cache", "curve", "--hyperelliptic", "y^2+y=x^3", "--q", "2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("command") == "curve");
  CHECK(j.at("tool_version") == nazeta::kToolVersion);
  CHECK(nazeta::poly_from_json(j.at("result").at("curve").at("weil_numerator")) ==
        nazeta::Poly::from_integers({1, 0, 2}));
  CHECK(j.at("result").at("abelian").at("class_number") == "3");
}

TEST_CASE("curve from a Weil numerator and a plane model") {
  CHECK(run({"--no-cache", "curve", "--weil", "2", "0", "1"}).code == 0);
  const auto fermat = run({"--no-cache", "curve", "--plane", "1,3,0,0;1,0,3,0;1,0,0,3", "--q", "2", "--genus", "1"});
  REQUIRE(fermat.code == 0);
  CHECK(json::parse(fermat.out).at("result").at("abelian").at("class_number") == "3");
}

TEST_CASE("malformed input exits with code 2 and error json") {
  const auto r = run({"--no-cache", "curve", "--weil", "2", "1", "1", "5", "2"});
  CHECK(r.code == 2);
  const json j = json::parse(r.out.empty() ? r.err : r.out);
  CHECK(j.at("error").at("type") == "InputError");
  CHECK(run({"--no-cache", "curve", "--weil", "6", "0", "1"}).code == 2);
  CHECK(run({"--no-cache", "curve"}).code == 2);
  CHECK(run({"--no-cache", "bogus"}).code == 2);
  CHECK(run({"--no-cache", "zeta", "nonstable", "--weil", "2", "2", "1", "0", "0", "0", "4"}).code == 2);
}

TEST_CASE("zeta rank on the reference curves") {
  const auto e = run({"--no-cache", "zeta", "rank", "--r", "1", "--weil", "2", "1", "1", "0", "2"});
  REQUIRE(e.code == 0);
  CHECK(json::parse(e.out).at("result").at("degP") == 2);
  const auto p = run({"--no-cache", "zeta", "rank", "--r", "2", "--weil", "2", "0", "1"});
  REQUIRE(p.code == 0);
  const json pj = json::parse(p.out).at("result");
  CHECK(pj.at("degP") == 0);
  CHECK(nazeta::poly_from_json(pj.at("P")) == nazeta::Poly::constant(nazeta::make_rational(1, 2)));
}

TEST_CASE("zeta nonstable exit codes") {
  CHECK(run({"--no-cache", "zeta", "nonstable", "--weil", "2", "1", "1", "0", "2"}).code == 0);
  CHECK(run({"--no-cache", "zeta", "nonstable", "--weil", "2", "1", "1", "0", "2", "--mode", "paper"}).code == 1);
  CHECK(run({"--no-cache", "zeta", "nonstable", "--weil", "2", "1", "1", "0", "2", "--s", "1"}).code == 2);
}

TEST_CASE("zeta restricted from a window file") {
  const auto dir = harness::scratch_dir("restricted");
  harness::write_file(dir / "w.json", R"({"q":2,"g":2,"r":1,"dL":1,"u":[{"d":1,"value":[4,1]}],"M":[1,1]})");
  const auto r = run({"--no-cache", "zeta", "restricted", "--window", (dir / "w.json").string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out).at("result");
  CHECK(nazeta::rational_from_json(j.at("residues").at("hn_normalized")) == 1);
  harness::write_file(dir / "bad.json",
                      R"({"q":2,"g":2,"r":2,"dL":0,"u":[{"d":0,"value":1},{"d":4,"value":5}],"M":1})");
  CHECK(run({"--no-cache", "zeta", "restricted", "--window", (dir / "bad.json").string()}).code == 2);
  CHECK(run({"--no-cache", "zeta", "restricted", "--window", (dir / "bad.json").string(), "--debug-skip-validation"})
            .code == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("mass command") {
  const auto r = run({"--no-cache", "mass", "--weil", "2", "0", "1", "--r", "2", "--d", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("beta") != std::string::npos);
}

TEST_CASE("verify re-checks a report and catches tampering") {
  const auto dir = harness::scratch_dir("verify");
  const auto rep = run({"--no-cache", "zeta", "rank", "--r", "1", "--weil", "2", "1", "1", "0", "2"});
  REQUIRE(rep.code == 0);
  harness::write_file(dir / "good.json", rep.out);
  const auto good = run({"verify", (dir / "good.json").string()});
  CHECK(good.code == 0);
  CHECK(good.err.find("functional_equation") != std::string::npos);
  json tampered = json::parse(rep.out);
  tampered["result"]["N"][0] = json::array({"4", "1"});
  harness::write_file(dir / "bad.json", tampered.dump());
  CHECK(run({"verify", (dir / "bad.json").string()}).code == 1);
  harness::write_file(dir / "junk.json", "{not json");
  CHECK(run({"verify", (dir / "junk.json").string()}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("csv output") {
  const auto dir = harness::scratch_dir("csv");
  const auto r = run({"--no-cache", "curve", "--weil", "2", "1", "1", "0", "2", "--m-max", "5", "--csv-series",
                      (dir / "s.csv").string(), "--csv-roots", (dir / "r.csv").string()});
  REQUIRE(r.code == 0);
  CHECK(harness::read_file(dir / "s.csv") == "degree,coefficient\n0,1\n1,3\n2,9\n3,21\n4,45\n5,93\n");
  const auto roots = harness::read_file(dir / "r.csv");
  CHECK(roots.rfind("re,im,abs\n", 0) == 0);
  CHECK(std::count(roots.begin(), roots.end(), '\n') == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("identical inputs give identical bytes with and without the cache") {
  const auto dir = harness::scratch_dir("cache");
  const std::vector<std::string> args{"zeta", "rank", "--r", "1", "--weil", "2", "2", "1", "0", "0", "0", "4"};
  const auto fresh = run(args);
  std::string first;
  {
    harness::CacheDirGuard guard(dir);
    first = run(args).out;
    CHECK(run(args).out == first);
  }
  CHECK(first == fresh.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache entries keyed by material and version") {
  const auto dir = harness::scratch_dir("store");
  nazeta::ResultCache cache(dir);
  const auto material = nazeta::ResultCache::key_material("{}", "curve", "{\"tol\":1e-9}");
  CHECK_FALSE(cache.get(material));
  cache.put(material, "{\"ok\":true}");
  CHECK(cache.get(material) == std::optional<std::string>("{\"ok\":true}"));
  nazeta::ResultCache other_version(dir, "9.9.9");
  CHECK_FALSE(other_version.get(material));
  CHECK_FALSE(cache.get(nazeta::ResultCache::key_material("{}", "curve", "{\"tol\":1e-8}")));
  CHECK(nazeta::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(nazeta::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  std::filesystem::remove_all(dir);
}
