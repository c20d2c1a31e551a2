#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

// Golden-output tests for the command-line front end.  The binary path comes
// from the FLOPKIT_CLI environment variable (set by the test harness); every
// invocation runs with color disabled and stderr discarded so stdout can be
// compared byte for byte.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("FLOPKIT_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "FLOPKIT_CLI must point at the CLI binary");
  const std::string command =
      "FLOPKIT_COLOR=never \"" + std::string(cli) + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int exit_code(const std::string& args) { return run(args).exit_code; }

}  // namespace

TEST_CASE("labels subcommand") {
  const auto e6 = run("labels E 6");
  CHECK(e6.exit_code == 0);
  CHECK(e6.out == "chain: 1 2 3 2 1\nbranch: 2\n");
  CHECK(run("labels A 4").out == "1 1 1 1\n");
  CHECK(run("labels D 5").out == "chain: 1 2 2\nforks: 1 1\n");
  CHECK(run("labels E 8").out == "chain: 2 4 6 5 4 3 2\nbranch: 3\n");
  CHECK(run("labels A 1").out == "1\n");
}

TEST_CASE("labels subcommand: usage failures") {
  CHECK(exit_code("labels D 3") == 2);
  CHECK(exit_code("labels X 4") == 2);
  CHECK(exit_code("labels E 9") == 2);
  CHECK(exit_code("labels") == 2);
  CHECK(exit_code("labels A") == 2);
}

TEST_CASE("equator subcommand") {
  const std::string row3 =
      R"({"N":4,"punctures":6,"equatorLabels":[1,3,2,3],"poles":["north","south"]})"
      "\n";
  CHECK(run("equator --ell 3").out == row3);
  // The label-3 vertex of the rank-7 diagram gives the identical sphere.
  CHECK(run("equator --diagram E7 --vertex 2").out == row3);
  const auto j = nlohmann::json::parse(run("equator --ell 6").out);
  CHECK(j["N"] == 12);
  CHECK(j["punctures"] == 14);
}

TEST_CASE("equator subcommand: errors") {
  CHECK(exit_code("equator --ell 7") == 3);
  CHECK(exit_code("equator --ell 0") == 3);
  CHECK(exit_code("equator") == 2);
  CHECK(exit_code("equator --ell 3 --diagram E6 --vertex 3") == 2);
  CHECK(exit_code("equator --diagram E6") == 2);
  CHECK(exit_code("equator --diagram D3 --vertex 1") == 2);  // bad diagram: usage
  CHECK(exit_code("equator --diagram E6 --vertex 9") == 3);  // bad vertex: domain
}

TEST_CASE("arrangement subcommand: one-parameter JSON") {
  const auto r = run("arrangement --diagram E6 --vertices 3 --window 0,1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"dimension":1,"walls":[{"normal":[1],"level":0,"label":1},)"
        R"({"normal":[3],"level":1,"label":3},{"normal":[2],"level":1,"label":2},)"
        R"({"normal":[3],"level":2,"label":3}],"window":{"lo":["0"],"hi":["1"]},)"
        R"("lattice":{"dimension":1,"generators":[[1]]}})"
        "\n");
}

TEST_CASE("arrangement subcommand: SVG output") {
  const auto svg = run("arrangement --diagram A2 --vertices 1,2 --window 0,0,2,2 --format svg");
  CHECK(svg.exit_code == 0);
  CHECK(svg.out.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  CHECK(svg.out.find("viewBox=\"0.00 0.00 200.00 200.00\"") != std::string::npos);
  std::size_t polylines = 0;
  for (std::size_t pos = 0; (pos = svg.out.find("<polyline", pos)) != std::string::npos;
       ++pos)
    ++polylines;
  CHECK(polylines == 7);  // 8 lattice lines, one touches the window only at a corner

  // Byte determinism of repeated invocations.
  CHECK(run("arrangement --diagram A2 --vertices 1,2 --window 0,0,2,2 --format svg").out ==
        svg.out);

  const auto ticks = run("arrangement --diagram E6 --vertices 3 --window 0,1 --format svg");
  CHECK(ticks.out.find("class=\"label-1\"") != std::string::npos);
  CHECK(ticks.out.find("class=\"label-2\"") != std::string::npos);
  CHECK(ticks.out.find("class=\"label-3\"") != std::string::npos);
  CHECK(ticks.out.find("class=\"axis\"") != std::string::npos);

  const auto scaled =
      run("arrangement --diagram E6 --vertices 3 --window 0,1 --format svg --scale 60");
  CHECK(scaled.out.find("viewBox=\"0.00 0.00 60.00 40.00\"") != std::string::npos);
}

TEST_CASE("arrangement subcommand: rational windows") {
  const auto r =
      run("arrangement --diagram E6 --vertices 3 --window 1/3,5/6 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["walls"].size() == 3);  // 1/3 (included: low face), 1/2, 2/3
  CHECK(j["walls"][0]["label"] == 3);
  CHECK(j["window"]["lo"][0] == "1/3");
}

TEST_CASE("arrangement subcommand: errors") {
  CHECK(exit_code("arrangement --diagram E6 --vertices 3 --window 0,1,2") == 2);
  CHECK(exit_code("arrangement --diagram E6 --vertices 3 --window a,b") == 2);
  CHECK(exit_code("arrangement --diagram E6 --vertices x --window 0,1") == 2);
  CHECK(exit_code("arrangement --diagram E6 --vertices 3 --window 1,1") == 3);
  CHECK(exit_code("arrangement --diagram E6 --vertices 3 --window 0,1 --format pdf") == 2);
  CHECK(exit_code("arrangement --diagram E6 --vertices 3 --window 0,1 --scale 0") == 2);
  CHECK(exit_code("arrangement --diagram D3 --vertices 1 --window 0,1") == 2);
  CHECK(exit_code("arrangement --diagram E6 --vertices 1,2,3 --window 0,0,0,1,1,1") == 3);
  CHECK(exit_code("arrangement --diagram E6 --vertices 9 --window 0,1") == 3);
}

TEST_CASE("chambers subcommand") {
  const auto r = run("chambers --diagram A2 --vertices 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"dimension":2,"count":2,"cells":[[["0","0"],["1","0"],["0","1"]],)"
        R"([["0","1"],["1","0"],["1","1"]]]})"
        "\n");
  const auto j = nlohmann::json::parse(run("chambers --diagram E8 --vertices 2,7").out);
  CHECK(j["count"] == 28);
}

TEST_CASE("chambergraph subcommand") {
  const auto r = run("chambergraph --diagram E6 --vertices 3 --depth 4");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["nodes"].size() == 2);
  CHECK(j["edges"].size() == 4);
  CHECK(j["nodes"][0]["shaded"] == nlohmann::json::array({3, 7}));
  CHECK(exit_code("chambergraph --diagram E6 --vertices 3 --depth 0") == 3);
}

TEST_CASE("helix subcommand") {
  const auto r = run("helix --ell 5 --range 0..9");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "0: OC(1)*O(-1)\n"
        "1: OC(5)\n"
        "2: OC(4)\n"
        "3: OC(3)\n"
        "4: Z\n"
        "5: OC(2)\n"
        "6: Zomega*O(1)\n"
        "7: omegaC(3)*O(1)\n"
        "8: omegaC(4)*O(1)\n"
        "9: omegaC(5)*O(1)\n");
  CHECK(run("helix --ell 1 --range -2..1").out ==
        "-2: OC(1)*O(-3)\n"
        "-1: OC(1)*O(-2)\n"
        "0: OC(1)*O(-1)\n"
        "1: OC(1)\n");
  CHECK(exit_code("helix --ell 7 --range 0..1") == 3);
  CHECK(exit_code("helix --ell 5 --range 5..2") == 3);
  CHECK(exit_code("helix --ell 5 --range 0..") == 2);
  CHECK(exit_code("helix --ell 5") == 2);
}

TEST_CASE("pi1 subcommand") {
  CHECK(run("pi1 --ell 3 --word \"c b0 b1 b2 b3 a\"").out == "trivial\n");
  CHECK(run("pi1 --ell 1 --word \"c\"").out == "a^-1 b0^-1\n");
  CHECK(run("pi1 --ell 1 --word \"c\" --monodromy").out ==
        "a^-1 b0^-1\nmonodromy: flop^-1 . tensor(-1) . flop\n");
  CHECK(run("pi1 --ell 2 --word \"b1 b1^-1 a\"").out == "a\n");
  CHECK(exit_code("pi1 --ell 3 --word \"b9\"") == 3);
  CHECK(exit_code("pi1 --ell 3 --word \"q\"") == 3);
  CHECK(exit_code("pi1 --ell 7 --word \"a\"") == 3);
  CHECK(exit_code("pi1 --ell 3") == 2);
}

TEST_CASE("gv subcommand") {
  CHECK(run("gv --ell 4").out == "(6,4,2,1), 56\n");
  CHECK(run("gv --ell 1").out == "(1), 1\n");
  CHECK(run("gv --csv").out ==
        "ell,gv_lower_bounds,dim_lower_bound\n"
        "1,\"(1)\",1\n"
        "2,\"(4,1)\",8\n"
        "3,\"(5,3,1)\",26\n"
        "4,\"(6,4,2,1)\",56\n"
        "5,\"(7,6,4,2,1)\",124\n"
        "6,\"(6,6,4,3,2,1)\",200\n");
  const auto j = nlohmann::json::parse(run("gv --ell 2 --json").out);
  CHECK(j["dimLowerBound"] == 8);
  CHECK(j["gvLowerBounds"] == nlohmann::json::array({4, 1}));
  CHECK(exit_code("gv --ell 9") == 3);
  CHECK(exit_code("gv") == 2);
}

TEST_CASE("conventions subcommand") {
  const auto r = run("conventions");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("A_n: vertices 1..n along the chain.") != std::string::npos);
  CHECK(r.out.find("fork vertices n-1 and n") != std::string::npos);
  CHECK(r.out.find("attached to chain vertex 3") != std::string::npos);
  CHECK(r.out.find("numbered rank+1") != std::string::npos);
  CHECK(r.out.find("half-open") != std::string::npos);
  CHECK(r.out.find("0 success, 2 usage error, 3 domain error, 4 internal guard") !=
        std::string::npos);
}

TEST_CASE("top-level behaviour") {
  CHECK(run("--version").out == "0.1.0\n");
  CHECK(exit_code("") == 2);
  CHECK(exit_code("frobnicate") == 2);
  CHECK(exit_code("labels A 4 --bogus") == 2);
  CHECK(exit_code("--help") == 0);
  CHECK(exit_code("helix --help") == 0);
}
