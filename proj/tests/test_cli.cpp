#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "qgw/rational.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

// run the binary named by QGW_BIN with the given arguments; stderr is
// dropped so usage-error tests stay quiet in the ctest log
RunResult run(const std::string& args) {
  const char* bin = std::getenv("QGW_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  REQUIRE(status != -1);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("compute i0 emits the documented JSON report") {
  RunResult r = run("compute --n 5 --degrees 5 --qmax 3 --what i0");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["model"]["n"] == 5);
  CHECK(j["model"]["degrees"] == json::array({5}));
  CHECK(j["qmax"] == 3);
  CHECK(j["what"] == "i0");
  CHECK(j["series"] == json::array({"1", "120", "113400", "168168000"}));
  CHECK(j["version"] == "0.1.0");
}

TEST_CASE("output is byte-identical across runs") {
  const std::string args = "compute --n 6 --degrees 3,3 --qmax 2 --what mirror-map";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("mirror map and quasimap series through the pipe") {
  RunResult mm = run("compute --n 5 --degrees 5 --qmax 3 --what mirror-map");
  CHECK(mm.code == 0);
  CHECK(json::parse(mm.out)["series"] == json::array({"0", "1", "770", "1014275"}));

  RunResult g1 = run("compute --n 5 --degrees 5 --qmax 2 --what g1-quasimap");
  CHECK(g1.code == 0);
  CHECK(json::parse(g1.out)["series"] == json::array({"0", "-4375/12", "-9002375/24"}));
}

TEST_CASE("csv and json agree through exact parsing") {
  RunResult cj = run("compute --n 5 --degrees 5 --qmax 2 --what ck");
  RunResult cc = run("compute --n 5 --degrees 5 --qmax 2 --what ck --format csv");
  CHECK(cj.code == 0);
  CHECK(cc.code == 0);
  json j = json::parse(cj.out);
  REQUIRE(j["labels"].size() == 5);
  CHECK(j["labels"][1] == "C1");
  CHECK(qgw::rat_parse(j["series"][1][1].get<std::string>()) == 770);

  // header plus 5 series x 3 degrees
  int lines = 0;
  for (char ch : cc.out) lines += ch == '\n';
  CHECK(lines == 16);
  CHECK(cc.out.substr(0, 14) == "label,d,value\n");
  CHECK(cc.out.find("C1,1,770\n") != std::string::npos);
  CHECK(cc.out.find("C2,1,1345\n") != std::string::npos);
}

TEST_CASE("decimal columns are opt-in and advisory") {
  RunResult r = run("compute --n 5 --degrees 5 --qmax 1 --what i0 --decimal 3");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["series"] == json::array({"1", "120"}));
  CHECK(j["series_decimal"] == json::array({"1.000", "120.000"}));

  RunResult t = run("table --n 5 --degrees 5 --qmax 1 --decimal 4");
  CHECK(t.code == 0);
  json tj = json::parse(t.out);
  CHECK(tj["invariants"][0]["d"] == 1);
  CHECK(tj["invariants"][0]["N"] == "2875/12");
  CHECK(tj["invariants"][0]["N_decimal"] == "239.5833");
}

TEST_CASE("verification suites run in canonical order and exit zero") {
  RunResult r = run("verify --n 5 --degrees 5 --qmax 2 --suites popa,pf");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["suites"] == json::array({"pf", "popa"}));
  for (const auto& o : j["outcomes"]) {
    CHECK(o["passed"] == true);
    CHECK(o["q_order"] == 2);
    CHECK(!o.contains("first_failure"));
  }

  RunResult c = run("verify --n 5 --degrees 5 --qmax 2 --suites pf --format csv");
  CHECK(c.code == 0);
  CHECK(c.out == "suite,q_order,passed,failure_q,failure_place,failure_lhs,failure_rhs\n"
                 "pf,2,true,,,,\n");
}

TEST_CASE("table emits the genus-one invariants") {
  RunResult r = run("table --n 5 --degrees 5 --qmax 2 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "d,N\n1,2875/12\n2,407125/8\n");
}

TEST_CASE("usage problems exit 2, never 1") {
  CHECK(run("compute --n 5 --degrees 4 --qmax 2 --what i0").code == 2);   // sum != n
  CHECK(run("compute --n 5 --degrees 5 --qmax 0 --what i0").code == 2);
  CHECK(run("compute --n 5 --degrees 5 --qmax 2 --what nope").code == 2);
  CHECK(run("verify --n 5 --degrees 5 --qmax 2 --suites bogus").code == 2);
  CHECK(run("").code == 2);                                               // missing subcommand
  RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("compute") != std::string::npos);
}
