#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "dmkit/cli.hpp"

using namespace dmkit;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/dmkit_cli_" + std::to_string(getpid()) + "_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kRushGDoc = R"({
  "ring": {"vars": ["u", "v"], "field": "Q", "order": "grevlex"},
  "precision": 12,
  "terms": [
    {"a": "u", "j": 0, "unit": "one"},
    {"a": "v", "j": 1, "unit": "geom"}
  ]
})";

}  // namespace

TEST_CASE("rush subcommand certifies the corrected example") {
  CliResult r = run_cli({"rush"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c(fg) = c(g): yes") != std::string::npos);
  CHECK(r.out.find("paper cofactors for v validate: yes") != std::string::npos);
  CHECK(r.out.find("v^2 + u") != std::string::npos);  // u + v^2 in canonical order

  CliResult j = run_cli({"rush", "--json"});
  CHECK(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["identity"]["verdict"] == "verified");
}

TEST_CASE("dm exit codes: verified 0, refuted 1, inconclusive 3") {
  std::string f = write_temp("f.txt", "u + v*X");
  std::string g = write_temp("g.txt", "v + u*X");
  CHECK(run_cli({"dm", f, g, "--k", "1"}).code == 1);
  CHECK(run_cli({"dm", f, g, "--k", "2"}).code == 0);

  // a true series cut off at depth 1 cannot certify: inconclusive
  std::string gj = write_temp("g.json", kRushGDoc);
  std::string fj = write_temp("f2.txt", "v + X");
  CliResult inc = run_cli({"dm", fj, gj, "--k", "2", "--dmax", "1"});
  CHECK(inc.code == 3);
  CHECK(inc.out.find("verdict: inconclusive") != std::string::npos);
}

TEST_CASE("dm defaults pick k from mu at the origin") {
  std::string f = write_temp("rf.txt", "v + X");
  std::string g = write_temp("rg.json", kRushGDoc);
  CliResult r = run_cli({"dm", f, g, "--min-exponent"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k: 2 (mu_at_point") != std::string::npos);
  CHECK(r.out.find("verdict: verified") != std::string::npos);
  CHECK(r.out.find("d_cert: 2") != std::string::npos);
  CHECK(r.out.find("min exponent: 1") != std::string::npos);
}

TEST_CASE("reduction subcommand reports the whole criterion-8 story") {
  std::string f = write_temp("f8.txt", "u + v*X");
  std::string g = write_temp("g8.txt", "v + u*X");
  CliResult r = run_cli({"reduction", f, g, "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k = 1: refuted") != std::string::npos);
  CHECK(r.out.find("k = 2: verified") != std::string::npos);
  CHECK(r.out.find("reduction number: 1 (bound 1)") != std::string::npos);
}

TEST_CASE("content subcommand prints generators and basis") {
  std::string g = write_temp("cg.json", kRushGDoc);
  CliResult r = run_cli({"content", g});
  CHECK(r.code == 0);
  CHECK(r.out.find("content: (u, v)") != std::string::npos);
  CHECK(r.out.find("groebner basis: (u, v)") != std::string::npos);

  std::string z = write_temp("zero.json", R"({
    "ring": {"vars": ["u", "v"], "field": "Q"}, "terms": []})");
  CliResult rz = run_cli({"content", z});
  CHECK(rz.code == 0);
  CHECK(rz.out.find("content: (0)") != std::string::npos);
}

TEST_CASE("schema violations exit 2 and name the field path") {
  std::string bad = write_temp("bad.json", R"({
    "ring": {"vars": ["u", "v"], "field": "Q"},
    "terms": [{"a": "1", "j": 0, "unit": {"coeffs": ["u"]}}]})");
  CliResult r = run_cli({"content", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("terms[0].unit.coeffs[0]") != std::string::npos);

  CliResult missing = run_cli({"content", "/tmp/definitely_not_here.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"dm", "only-one-file"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("mu subcommand") {
  CliResult r = run_cli({"mu", "u,v,u+v", "--point", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mu = 2") != std::string::npos);
  CHECK(r.out.find("(u, v)") != std::string::npos);

  CliResult r2 = run_cli({"mu", "u,v", "--point", "1,1"});
  CHECK(r2.out.find("mu = 1") != std::string::npos);
}

TEST_CASE("counterexample subcommand prints the witness") {
  CliResult r = run_cli({"counterexample", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("inequality certified; witness a0*b1") != std::string::npos);
  CHECK(r.out.find("contrast at k+1 = 2: verified") != std::string::npos);
}

TEST_CASE("corpus subcommand summarizes verdicts") {
  CliResult r = run_cli({"corpus", "--seed", "42", "--count", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: 5/5") != std::string::npos);
}

TEST_CASE("identical inputs and seed give byte-identical JSON") {
  std::string f = write_temp("df.txt", "v + X");
  std::string g = write_temp("dg.json", kRushGDoc);
  CliResult a = run_cli({"dm", f, g, "--json"});
  CliResult b = run_cli({"dm", f, g, "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json doc = json::parse(a.out);
  CHECK(doc["schema"] == "dm-report/1");

  CliResult c1 = run_cli({"corpus", "--seed", "9", "--count", "6", "--json"});
  CliResult c2 = run_cli({"corpus", "--seed", "9", "--count", "6", "--json", "--threads", "2"});
  CHECK(c1.out == c2.out);
}

TEST_CASE("DMKIT_DMAX provides the global depth default") {
  std::string f = write_temp("ef.txt", "v + X");
  std::string g = write_temp("eg.json", kRushGDoc);
  setenv("DMKIT_DMAX", "9", 1);
  CliResult r = run_cli({"dm", f, g, "--json"});
  unsetenv("DMKIT_DMAX");
  json doc = json::parse(r.out);
  CHECK(doc["d_max"] == 9);
  // explicit flag wins over the environment
  setenv("DMKIT_DMAX", "9", 1);
  CliResult r2 = run_cli({"dm", f, g, "--dmax", "7", "--json"});
  unsetenv("DMKIT_DMAX");
  CHECK(json::parse(r2.out)["d_max"] == 7);
}

TEST_CASE("text inputs honor ring flags") {
  std::string f = write_temp("pf.txt", "x + y*X");
  std::string g = write_temp("pg.txt", "y + z*X");
  CliResult r = run_cli({"dm", f, g, "--vars", "x,y,z", "--field", "Fp:101"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Fp:101[x,y,z]") != std::string::npos);
}
