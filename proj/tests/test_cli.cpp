#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayley/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cayley::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("bracket and laplace verbs") {
  auto r = run({"bracket", "p01*p23", "p01*p23"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*p01*p23\n");
  auto l = run({"laplace", "p01*p23 - p02*p13 + p03*p12"});
  CHECK(l.code == 0);
  CHECK(l.out == "3\n");
  auto j = run({"--json", "laplace", "p01*p23"});
  CHECK(nlohmann::json::parse(j.out)["laplacian"] == "1");
  auto after = run({"laplace", "p01*p23", "--json"});
  CHECK(after.out == j.out);
}

TEST_CASE("harmonic, f2, quadcheck, dualize") {
  auto h = run({"--json", "harmonic", "p01*p23"});
  auto hj = nlohmann::json::parse(h.out);
  CHECK(hj["degree"] == 2);
  CHECK(hj["components"][0] == "2/3*p01*p23 + 1/3*p02*p13 - 1/3*p03*p12");
  CHECK(hj["components"][1] == "1/3");

  auto f = run({"--json", "--certificate", "f2", "p01*p02*p23"});
  CHECK(f.code == 0);
  auto fj = nlohmann::json::parse(f.out);
  CHECK(fj["f2"] == "2/3*p01*p02*p23 + 1/3*p02^2*p13 - 1/3*p02*p03*p12");
  CHECK(fj["cofactor_b"] == "2*p02");
  CHECK(fj["cofactor_a"] == "0");
  CHECK(fj["f2_self_bracket_over_q"] == "4/9*p02^2");

  auto q = run({"quadcheck", "p02^2 + 4*p01*p12", "0"});
  CHECK(q.code == 0);
  CHECK(q.out == "0\n");

  auto d = run({"dualize", "p01*p02"});
  CHECK(d.out == "-p13*p23\n");
}

TEST_CASE("classify from a polynomial and from a curve file") {
  auto c = run({"--json", "classify", "--poly", "p01*p02*p23"});
  REQUIRE(c.code == 0);
  auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["weak_cayley"] == true);
  CHECK(cj["honest"] == true);
  CHECK(cj["canonical_rep"]["f2"] == "2/3*p01*p02*p23 + 1/3*p02^2*p13 - 1/3*p02*p03*p12");
  CHECK(cj["honest_witnesses"]["witnesses"].size() == 3);

  auto control = run({"--json", "--certificate", "classify", "--poly", "p01^2 + p02*p13"});
  auto kj = nlohmann::json::parse(control.out);
  CHECK(kj["weak_cayley"] == false);
  CHECK(kj["weak_witness"]["remainder"] != "0");
  CHECK(kj["weak_witness"]["cofactors"].size() == 2);

  std::string file = write_temp("cayley_test_chain.json",
                                R"({"generators": ["x0*x2", "x1*x2", "x0*x3"]})");
  auto chain = run({"--json", "classify", "--file", file});
  REQUIRE(chain.code == 0);
  auto chj = nlohmann::json::parse(chain.out);
  CHECK(chj["weak_cayley"] == true);
  CHECK(chj["honest"] == true);
}

TEST_CASE("chow and associated verbs") {
  std::string file = write_temp("cayley_test_cubic.json",
                                R"({"generators": ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"],
                                    "param": ["1", "t", "t^2", "t^3"]})");
  auto c = run({"chow", "--file", file});
  CHECK(c.code == 0);
  CHECK(c.out.find("p12^3") != std::string::npos);
  auto a = run({"--json", "associated", "--file", file, "-k", "1"});
  REQUIRE(a.code == 0);
  auto aj = nlohmann::json::parse(a.out);
  CHECK(aj["coords"].size() == 6);
  CHECK(aj["coords"][0] == "1");
  CHECK(aj["coords"][3] == "t^2");
  auto budget = run({"--max-degree", "2", "chow", "--file", file});
  CHECK(budget.code == 1);
  CHECK(budget.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"laplace", "p01 +"}).code == 2);
  CHECK(run({"laplace", "x9"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bracket", "p01"}).code == 2);
  CHECK(run({"chow", "--file", "/nonexistent/curve.json"}).code == 2);
  auto bad = run({"f2", "p01^2 + p02*p13"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotWeaklyCayley") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  std::string junk = write_temp("cayley_test_junk.json", "{ not json");
  CHECK(run({"chow", "--file", junk}).code == 2);
}

TEST_CASE("selftest passes and output is deterministic") {
  auto a = run({"selftest"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  auto b = run({"selftest"});
  CHECK(a.out == b.out);
  auto x = run({"--json", "classify", "--poly", "p01*p23"});
  auto y = run({"--json", "classify", "--poly", "p01*p23"});
  CHECK(x.out == y.out);
}
