#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "skein/serialize.hpp"
#include "skein/torus.hpp"

using namespace skein;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SKEIN_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("torus subcommand") {
  const Run r = run("torus --m 2 --n 3 --colors '(1)'");
  CHECK(r.code == 0);
  const RationalQT expected = colored_homfly_torus(TorusLinkSpec::knot(2, 3, Partition({1}))).value;
  CHECK(r.out == expected.to_string() + "\n");
  const Run j = run("--json torus --m 2 --n 3 --colors '(1)'");
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["spec"] == "T(2,3) m=2 n=3 L=1 (1)");
  CHECK(rational_function_from_json(doc["value"]) == expected);
  CHECK(run("torus --m 1 --n 2 --components 2 --colors '(2);(1)'").code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("torus --m 2 --n 4 --colors '(1)'").code == 1);
  CHECK(run("torus --m 2 --n 3 --components 2 --colors '(1)'").code == 1);
  CHECK(run("torus --m x --n 3").code == 2);
  CHECK(run("torus --m 2 --n 3 --colors '(1'").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("homfly-braid --strands 2 --word 's1 q'").code == 2);
  CHECK(run("homfly-braid --strands 2 --word 's3'").code == 1);
  CHECK(run("special --kind delta --m 1 --n 1 --components 2 --colors '(1);(1)'").code == 1);
  const Run e = run("--json torus --m 2 --n 4 --colors '(1)'", true);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["error"] == "NonCoprime");
  CHECK(run("verify --theorem bogus").code == 2);
}

TEST_CASE("characters CSV") {
  const Run r = run("characters --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "lambda\\mu,(3),\"(2,1)\",\"(1,1,1)\"\n(3),1,1,1\n\"(2,1)\",-1,0,2\n\"(1,1,1)\",1,-1,1\n");
  CHECK(run("characters --n 13").code == 1);
}

TEST_CASE("plethysm, unknot, special and braid subcommands") {
  CHECK(run("plethysm --m 2 --colors '(1)'").out == "(2): 1\n(1,1): -1\n");
  CHECK(run("unknot --color '(1)'").code == 0);
  CHECK(run("special --kind H --m 2 --n 3 --color '(1)'").out == "-1*q^0*t^-4 + 2*q^0*t^-2\n");
  CHECK(run("special --kind delta --m 2 --n 3 --color '(1)' --basis delta").out == "-1 + Delta_2\n");
  CHECK(run("special --kind delta --m 2 --n 3 --color '(2,2)' --basis delta").out ==
        "5 - 4*Delta_4 - Delta_6 + 3*Delta_8 + 2*Delta_10 - 2*Delta_12 - Delta_14 + Delta_16\n");
  const Run b = run("homfly-braid --strands 2 --word 's1 s1 s1'");
  CHECK(b.code == 0);
  CHECK(b.out.find("writhe: 3\n") != std::string::npos);
  CHECK(b.out.find("P: 1*q^-2*t^-2 - 1*q^0*t^-4 + 1*q^2*t^-2\n") != std::string::npos);
  CHECK(run("homfly-braid --strands 2 --word '1 1 1'").out == b.out);
  CHECK(run("homfly-braid --strands 9 --word '1'").code == 1);
  CHECK(run("homfly-braid --strands 9 --word '1' --max-strands 9").code == 0);
}

TEST_CASE("export round trip") {
  const std::string path = "cli_export_test.json";
  CHECK(run("export --m 2 --n 3 --colors '(2)' --out " + path).code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  const auto doc = nlohmann::json::parse(in);
  CHECK(rational_function_from_json(doc["value"]) ==
        colored_homfly_torus(TorusLinkSpec::knot(2, 3, Partition({2}))).value);
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
  const Run r = run("verify --theorem lemma65");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("lemma65: PASS\n", 0) == 0);
  const Run j = run("--json verify --theorem lemma73");
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
  std::ofstream("cli_grid_test.json") << R"({"knots": [[2, 3]], "max_color_size": 2})";
  const Run g = run("verify --theorem thm72 --grid cli_grid_test.json");
  CHECK(g.code == 0);
  std::remove("cli_grid_test.json");
}

TEST_CASE("output does not depend on threads or kernels") {
  const std::string args = " torus --m 3 --n 4 --colors '(2,2)'";
  const Run a = run("--threads 1" + args);
  const Run b = run("--threads 4" + args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::string cmd = "SKEIN_HOMFLY_SIMD=scalar " + std::string(SKEIN_CLI_PATH) + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out == a.out);
  const Run v1 = run("--threads 1 verify --theorem thm71");
  const Run v4 = run("--threads 4 verify --theorem thm71");
  CHECK(v1.out == v4.out);
}
