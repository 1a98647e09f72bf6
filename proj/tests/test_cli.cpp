#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tutte/bivar_poly.hpp"
#include "tutte/cli.hpp"
#include "tutte/fixtures.hpp"
#include "tutte/verify.hpp"

using namespace tutte;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tutte");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tutte_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("compute named families") {
  const Run r = run({"compute", "--family", "pyrene", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == appendix_fixtures().polynomial(Chain::pyrene, 1).poly.to_text() + "\n");
  CHECK(run({"compute", "--family", "fan", "--n", "2", "--method", "delcon"}).out ==
        "x^2 + x + y\n");
  CHECK(run({"compute", "--family", "fan", "--n", "2", "--method", "subset"}).out ==
        "x^2 + x + y\n");
  CHECK(run({"compute", "--family", "linear", "--n", "1"}).out ==
        "x^5 + x^4 + x^3 + x^2 + x + y\n");
  const Run w = run({"compute", "--family", "wheel", "--n", "3"});
  CHECK(w.out == "x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y\n");
  CHECK(run({"compute", "--family", "triphenylene", "--n", "2", "--method", "delcon"}).out ==
        appendix_fixtures().polynomial(Chain::triphenylene, 2).poly.to_text() + "\n");
}

TEST_CASE("compute from a graph file") {
  const std::string k2 = write_temp("k2.txt", "vertices 2\n0 1\n");
  CHECK(run({"compute", "--graph", k2}).out == "x\n");
  CHECK(run({"compute", "--graph", k2, "--method", "subset"}).out == "x\n");
  CHECK(run({"compute", "--graph", k2, "--method", "closed"}).code == kExitInfeasible);
}

TEST_CASE("compute fan-like families from a base") {
  const std::string p3 = write_temp("p3.txt", "vertices 3\n0 1\n1 2\n");
  const Run closed = run({"compute", "--base", p3, "--marks", "0,1,2", "--shape", "+G+", "--n", "3"});
  const Run direct = run({"compute", "--base", p3, "--marks", "0,1,2", "--shape", "+G+", "--n", "3",
                          "--method", "delcon"});
  CHECK(closed.code == 0);
  CHECK(closed.out == direct.out);
  CHECK(run({"compute", "--base", p3, "--marks", "0,1", "--shape", "G", "--n", "2"}).code ==
        kExitInputError);
  CHECK(run({"compute", "--base", p3, "--marks", "0,1", "--n", "2"}).code == kExitInputError);
}

TEST_CASE("json output round-trips") {
  const Run r = run({"compute", "--family", "pyrene", "--n", "2", "--output", "json"});
  REQUIRE(r.code == 0);
  const BivarPoly p = BivarPoly::from_json(nlohmann::json::parse(r.out));
  CHECK(p == appendix_fixtures().polynomial(Chain::pyrene, 2).poly);
}

TEST_CASE("text output is deterministic") {
  const Run a = run({"compute", "--family", "triphenylene", "--n", "3"});
  const Run b = run({"compute", "--family", "triphenylene", "--n", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("tau") {
  CHECK(run({"tau", "--family", "triphenylene", "--n", "2"}).out == "1369728\n");
  CHECK(run({"tau", "--family", "linear", "--n", "2"}).out == "35\n");
  CHECK(run({"tau", "--family", "pyrene", "--n", "3"}).out == "1212779520\n");
  CHECK(run({"tau", "--family", "pyrene", "--n", "4", "--method", "eval"}).out ==
        "1278043619328\n");
  CHECK(run({"tau", "--family", "pyrene", "--n", "4", "--method", "kirchhoff"}).out ==
        "1278043619328\n");
  CHECK(run({"tau", "--family", "fan", "--n", "3", "--method", "kirchhoff"}).out == "8\n");
  CHECK(run({"tau", "--family", "fan", "--n", "3"}).code == kExitInfeasible);
  CHECK(run({"tau", "--family", "pyrene", "--n", "5000", "--method", "kirchhoff"}).code ==
        kExitInfeasible);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"compute", "--family", "benzene", "--n", "1"}).code == kExitInputError);
  CHECK(run({"compute", "--family", "pyrene", "--n", "0"}).code == kExitInputError);
  CHECK(run({"compute", "--family", "wheel", "--n", "1"}).code == kExitInputError);
  CHECK(run({"compute", "--graph", "/nonexistent.txt"}).code == kExitInputError);
  const std::string bad = write_temp("bad.txt", "vertices 2\n0 5\n");
  const Run r = run({"compute", "--graph", bad});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("position 2") != std::string::npos);
  const std::string split = write_temp("split.txt", "vertices 3\n0 1\n");
  CHECK(run({"compute", "--graph", split}).code == kExitInputError);
  CHECK(run({"compute", "--family", "pyrene", "--graph", split}).code == kExitInputError);
  CHECK(run({"compute", "--method", "magic", "--family", "fan", "--n", "2"}).code ==
        kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("subset edge limit") {
  CHECK(run({"compute", "--family", "pyrene", "--n", "1", "--method", "subset"}).code ==
        kExitOk);
  CHECK(run({"compute", "--family", "pyrene", "--n", "2", "--method", "subset"}).code ==
        kExitInfeasible);
  ::setenv(kSubsetLimitEnv, "3", 1);
  CHECK(run({"compute", "--family", "fan", "--n", "3", "--method", "subset"}).code ==
        kExitInfeasible);
  CHECK(run({"compute", "--family", "fan", "--n", "2", "--method", "subset"}).code == kExitOk);
  ::setenv(kSubsetLimitEnv, "lots", 1);
  CHECK(run({"compute", "--family", "fan", "--n", "2", "--method", "subset"}).code ==
        kExitInputError);
  ::unsetenv(kSubsetLimitEnv);
}

TEST_CASE("verify") {
  const Run appendix = run({"verify", "appendix"});
  CHECK(appendix.code == 0);
  std::size_t lines = 0;
  for (char c : appendix.out) lines += c == '\n';
  CHECK(lines == 12);
  CHECK(appendix.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "oracles"}).code == 0);
  CHECK(run({"verify", "duality"}).code == 0);
  CHECK(run({"verify", "corollaries"}).code == 0);
  CHECK(run({"verify"}).code == 0);
  CHECK(run({"verify", "everything"}).code == kExitInputError);
}

TEST_CASE("verify report formatting") {
  VerifyReport report;
  report.checks.push_back({"good", true, ""});
  CHECK(report.passed());
  report.checks.push_back({"bad", false, "C3"});
  CHECK_FALSE(report.passed());
  std::ostringstream os;
  report.print(os);
  CHECK(os.str() == "PASS good\nFAIL bad: C3\n");
}
