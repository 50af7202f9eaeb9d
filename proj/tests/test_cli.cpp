#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"
#include "quadlie/catalog.hpp"
#include "quadlie/convert.hpp"
#include "quadlie/io.hpp"
#include "quadlie/trivector.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace quadlie;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "quadlie");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json out_json(const Result &r) { return json::parse(r.out); }
json err_json(const Result &r) { return json::parse(r.err); }

/// A scratch file removed on scope exit.
struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string &name, const std::string &text) {
    path = std::filesystem::temp_directory_path() / ("quadlie_test_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::string algebra_text(const std::string &trivector) {
  return io::algebra_to_json(algebra_from_trivector(parse_trivector(trivector))).dump(2);
}

} // namespace

TEST_CASE("verify a catalog algebra") {
  const TempFile f("l73.json", algebra_text(catalog_entry("L7,3").trivector));
  const Result r = run({"verify", f.str()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const json j = out_json(r);
  CHECK(j["lie"] == true);
  CHECK(j["invariant"] == true);
  CHECK(j["nondegenerate"] == true);
  CHECK(j["orthogonality"] == true);
  CHECK(j["nilindex"] == 2);
  CHECK(j["type"] == json::array({7, 7}));
  CHECK(j["reduced"] == true);
  CHECK(j["ok"] == true);
}

TEST_CASE("verify an abelian algebra") {
  const TempFile f("ab.json", R"({"dim": 3, "brackets": []})");
  const Result r = run({"verify", f.str()});
  CHECK(r.code == 0);
  const json j = out_json(r);
  CHECK(j["lie"] == true);
  CHECK(j["nilindex"] == 1);
  CHECK(j["reduced"] == false);
  CHECK_FALSE(j.contains("invariant"));
}

TEST_CASE("verify reports the invariance defect of a corrupted table") {
  json a = json::parse(algebra_text("123"));
  for (auto &b : a["brackets"])
    if (b["i"] == 2 && b["j"] == 3)
      for (auto &x : b["v"])
        if (x != "0")
          x = "-" + x.get<std::string>();
  const TempFile f("bad.json", a.dump());
  const Result r = run({"verify", f.str()});
  CHECK(r.code == 1);
  const json j = out_json(r);
  CHECK(j["lie"] == true);
  CHECK(j["invariant"] == false);
  CHECK_FALSE(j["invariance_defects"].empty());
  const json e = err_json(r);
  CHECK(e["ok"] == false);
  CHECK(e["command"] == "verify");
}

TEST_CASE("verify reports non-Lie brackets") {
  const TempFile f("nonlie.json",
                   R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "v": [1, 0, 0]}, {"i": 1, "j": 3, "v": [0, 1, 0]}]})");
  const Result r = run({"verify", f.str()});
  CHECK(r.code == 1);
  const json j = out_json(r);
  CHECK(j["lie"] == false);
  CHECK(j["jacobi_defects"] == json::array({json::array({1, 2, 3})}));
}

TEST_CASE("parse errors carry line and column") {
  const TempFile f("broken.json", "{\n  \"dim\": 3,\n  \"brackets\": [\n    {\"i\": 1,, \"j\": 2}\n  ]\n}\n");
  const Result r = run({"verify", f.str()});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  const json e = err_json(r);
  CHECK(e["ok"] == false);
  CHECK(e["line"] == 4);
  CHECK(e["column"].get<int>() > 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"catalog", "L4,1"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
  CHECK(run({"random", "--n", "2"}).code == 2);
  CHECK(run({"verify", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"convert", "--from", "nothing", "--to", "family", "123"}).code == 2);
  CHECK(run({"rank", "12"}).code == 2);
  const Result r = run({"catalog", "L4,1"});
  CHECK(err_json(r)["command"] == "catalog");
}

TEST_CASE("catalog counts") {
  const Result j = run({"catalog", "--counts"});
  CHECK(j.code == 0);
  const json c = out_json(j);
  CHECK(c["counts"] == json({{"6", 1}, {"8", 0}, {"10", 1}, {"12", 2}, {"14", 5}, {"16", 13}}));
  CHECK(c["total"] == 22);
  const Result s = run({"catalog", "--counts", "--format", "summary"});
  CHECK(s.out.find("1 0 1 2 5 13") != std::string::npos);
  CHECK(s.out.find("total: 22") != std::string::npos);
}

TEST_CASE("catalog entry and --all") {
  const Result one = run({"catalog", "L8,5"});
  CHECK(one.code == 0);
  const json j = out_json(one);
  CHECK(j["trivector"] == "134+178+256+278");
  CHECK(j["report"]["ok"] == true);

  const Result latex = run({"--format", "latex", "catalog", "L6,1"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("alignat") != std::string::npos);
  CHECK(latex.out.find("[e_1,e_2]") != std::string::npos);

  const Result all = run({"catalog", "--all"});
  CHECK(all.code == 0);
  CHECK(out_json(all)["passed"] == 22);
}

TEST_CASE("QUADLIE_FORMAT overrides --format") {
  ::setenv("QUADLIE_FORMAT", "summary", 1);
  const Result r = run({"catalog", "--counts", "--format", "json"});
  ::unsetenv("QUADLIE_FORMAT");
  CHECK(r.out.find("total: 22") != std::string::npos);
  CHECK_FALSE(json::accept(r.out));
}

TEST_CASE("convert between representations") {
  const Result fam = run({"convert", "--from", "trivector", "--to", "family", "123+145"});
  REQUIRE(fam.code == 0);
  const TempFile ff("fam.json", fam.out);
  const QuadraticFamily f = io::family_from_json(io::read_file(ff.str()));
  CHECK(family_to_coeffs(f) == delta_inv(parse_trivector("123+145")));

  const Result chain = run({"convert", "--from", "family", "--to", "chain", ff.str()});
  REQUIRE(chain.code == 0);
  const TempFile cf("chain.json", chain.out);
  const Result back = run({"convert", "--from", "chain", "--to", "trivector", cf.str()});
  REQUIRE(back.code == 0);
  CHECK(out_json(back)["text"] == "123+145");

  const Result alg = run({"convert", "--from", "trivector", "--to", "algebra", "124+135+236"});
  REQUIRE(alg.code == 0);
  const TempFile af("alg.json", out_json(alg)["algebra"].dump());
  const Result tri = run({"convert", "--from", "algebra", "--to", "trivector", af.str()});
  CHECK(out_json(tri)["text"] == "124+135+236");

  const Result cyc = run({"convert", "--from", "trivector", "--to", "cocycle", "123", "--n", "4"});
  const TempFile yf("cyc.json", cyc.out);
  CHECK(io::coeffs_from_json(io::read_file(yf.str())) == parse_trivector("123", 4));
}

TEST_CASE("extend along a chain and by a derivation") {
  const TempFile cf("chain.json", io::chain_to_json(coeffs_to_chain(delta_inv(parse_trivector("123+145")))).dump());
  const Result r = run({"extend", "--chain", cf.str()});
  CHECK(r.code == 0);
  const json j = out_json(r);
  CHECK(j["nnp"] == true);
  CHECK(j["two_step_property"] == true);
  CHECK(j["closed_formula_agrees"] == true);
  CHECK(j["reduced_by_chain"] == true);
  CHECK(j["report"]["nilindex"] == 2);

  // A_2 = span{b1, b2, b1*, b2*} with d: b1 -> b2*, b2 -> -b1*.
  const TempFile af("a2.json", io::algebra_to_json(QuadraticStructure(AlgebraData::abelian(4), hyperbolic_form(2))).dump());
  Mat d(4, 4);
  d(3, 0) = 1;
  d(2, 1) = -1;
  const TempFile df("d.json", io::mat_to_json(d).dump());
  const Result e = run({"extend", "--algebra", af.str(), "--derivation", df.str()});
  CHECK(e.code == 0);
  const json ej = out_json(e);
  CHECK(ej["inner"] == false);
  CHECK(ej["two_step_criterion"] == true);
  CHECK(ej["centre_formula_agrees"] == true);
  CHECK(ej["report"]["nilindex"] == 2);
  CHECK(run({"extend"}).code == 2);
}

TEST_CASE("tstar, family, rank and decompose") {
  const Result t = run({"tstar", "123+456"});
  CHECK(t.code == 0);
  CHECK(out_json(t)["cyclic"] == true);
  CHECK(out_json(t)["radical_dim"] == 0);

  const TempFile ff("fam.json", io::family_to_json(coeffs_to_family(delta_inv(parse_trivector("123", 4)))).dump());
  const Result f = run({"family", ff.str(), "--to-algebra"});
  CHECK(f.code == 0);
  CHECK(out_json(f)["nondegenerate"] == false);
  CHECK(out_json(f)["report"]["reduced"] == false);

  QuadraticFamily bad = coeffs_to_family(delta_inv(parse_trivector("123")));
  bad.mats[0](0, 0) = 1;
  const TempFile bf("badfam.json", io::family_to_json(bad).dump());
  const Result fb = run({"family", bf.str(), "--validate"});
  CHECK(fb.code == 1);
  CHECK(out_json(fb)["valid"] == false);

  const Result rk = run({"rank", "123+145"});
  CHECK(rk.code == 0);
  CHECK(out_json(rk)["rank"] == 5);
  CHECK(out_json(run({"rank", "123", "--n", "5"}))["kernel"].size() == 2);

  const TempFile qf("q.json", algebra_text("124+135+236"));
  const Result dec = run({"decompose", qf.str()});
  CHECK(dec.code == 0);
  CHECK(out_json(dec)["isometric"] == true);
  CHECK(out_json(dec)["trivector"] == "124+135+236");
}

TEST_CASE("random output is a function of the seed") {
  const Result a = run({"random", "--n", "5", "--seed", "42"});
  const Result b = run({"random", "--n", "5", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(out_json(a)["seed"] == 42);
  const Result c = run({"random", "--n", "5", "--seed", "43"});
  CHECK(c.out != a.out);

  for (int seed = 1; seed <= 20; ++seed) {
    const Result r = run({"random", "--n", "4", "--seed", std::to_string(seed)});
    CHECK(r.code == 0);
    const json j = out_json(r);
    CHECK(j["trivector_rank"].get<int>() <= 3);
    if (j.contains("report"))
      CHECK(j["report"]["reduced"] == false);
  }

  const Result s1 = run({"random", "--n", "6", "--seed", "1", "--sweep", "100"});
  const Result s2 = run({"random", "--n", "6", "--seed", "1", "--sweep", "100"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(out_json(s1)["seeds"] == 100);
}

TEST_CASE("selftest") {
  const Result r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(out_json(r)["all_roads"] == 22);
}
