#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* cli = std::getenv("CATENA_CLI");
  if (!cli) throw std::runtime_error("CATENA_CLI not set");
  std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
  cmd += std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_stripped(const std::string& out) {
  json j = json::parse(out);
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("set-level invariants of <4,9,18> over the given basis") {
  const auto r = run_cli("invariants --gens 4,9,18 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["catenary"]["value"] == 9);
  CHECK(j["result"]["equivalent"]["value"] == 14);
  CHECK(j["result"]["monotone"]["value"] == 14);
  CHECK(j["result"]["equivalent"]["exactness"] == "exact");
  CHECK(j["reduced"] == true);
  CHECK(j["minimal_generators"] == json::array({4, 9}));
  CHECK(j["basis"] == json::array({4, 9, 18}));
}

TEST_CASE("factorizations of 25 in <5,7,9>") {
  const auto r = run_cli("factorizations --gens 5,7,9 --element 25 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["count"] == 2);
  CHECK(j["result"]["factorizations"][0]["coeffs"] == json::array({5, 0, 0}));
  CHECK(j["result"]["factorizations"][1]["coeffs"] == json::array({0, 1, 2}));

  const auto text = run_cli("factorizations --gens 5,7,9 --element 25");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("(5,0,0)") != std::string::npos);
  CHECK(text.out.find("(0,1,2)") != std::string::npos);
}

TEST_CASE("betti elements of <5,6,19>") {
  const auto r = run_cli("betti --gens 5,6,19 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["elements"] == json::array({24, 25, 38}));
}

TEST_CASE("element invariants with witnesses") {
  const auto r = run_cli("invariants --gens 4,9,19 --element 105 --witness --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["catenary"] == 7);
  CHECK(j["result"]["equivalent"] == 3);
  CHECK(j["result"]["adjacent"] == 7);
  CHECK(j["result"]["monotone"] == 7);
  CHECK(j["result"]["count"] == 10);
  CHECK(j["result"].contains("catenary_witness"));
  CHECK(j["result"]["catenary_witness"]["bottleneck"] == 7);
}

TEST_CASE("validation failures exit with code 2 and name the precondition") {
  CHECK(run_cli("invariants --gens 4,6 --format json").exit_code == 2);
  CHECK(run_cli("invariants --gens 9,5 --format json").exit_code == 2);
  CHECK(run_cli("invariants --gens 5,7,9 --element 1").exit_code == 2);
}

TEST_CASE("guard overflow exits with code 3") {
  const auto r =
      run_cli("factorizations --gens 4,9,19 --element 105", "MONOID_MAX_FACTORIZATIONS=2");
  CHECK(r.exit_code == 3);
}

TEST_CASE("json output is schema-stable modulo timing") {
  const auto a = run_cli("set-invariants --gens 5,6,19 --format json");
  const auto b = run_cli("set-invariants --gens 5,6,19 --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(parse_stripped(a.out).dump() == parse_stripped(b.out).dump());
  const json j = json::parse(a.out);
  for (const char* key : {"command", "command_line", "version", "generators", "basis", "reduced",
                          "minimal_generators", "result", "timing_ms"})
    CHECK(j.contains(key));
  CHECK(j["result"].contains("apery"));
}

TEST_CASE("envelope payload round-trips") {
  const auto r = run_cli("invariants --gens 4,9,19 --element 105 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const std::string dumped = j.dump();
  CHECK(json::parse(dumped) == j);
}

TEST_CASE("family subcommands") {
  const auto fr = run_cli("family frobenius --a 5 --format json");
  REQUIRE(fr.exit_code == 0);
  const json j = json::parse(fr.out);
  CHECK(j["result"]["catenary"] == 7);
  CHECK(j["result"]["monotone"] == 14);
  CHECK(j["result"]["gap"] == 7);
  CHECK(j["result"]["betti"] == json::array({24, 25, 38}));

  const auto ar = run_cli("family arithmetic --a 11 --d 4 --k 4 --format json");
  REQUIRE(ar.exit_code == 0);
  CHECK(json::parse(ar.out)["result"]["catenary_closed"] == 7);

  CHECK(run_cli("family gap --n 1 --a 2 --x 2").exit_code == 2);  // non-minimal tuple
}

TEST_CASE("sweep subcommands run and exit cleanly") {
  CHECK(run_cli("sweep theorem1 --gens 5,7,9 --grid bound=120").exit_code == 0);
  CHECK(run_cli("sweep strict-inequality --gens 4,9,19 --grid bound=100").exit_code == 0);
  const auto c3 = run_cli("sweep conjecture3 --grid a=3..3,h=2..2,d=1..1,bound=80 --format json");
  REQUIRE(c3.exit_code == 0);
  CHECK(json::parse(c3.out)["result"]["summary"].contains("existence_rate"));
}

TEST_CASE("figure emits ordered csv rows") {
  const auto r = run_cli("figure frobenius --a-min 5 --a-max 7 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("a,catenary,monotone,gap") == 0);
  CHECK(r.out.find("5,7,14,7") != std::string::npos);
  CHECK(r.out.find("6,9,23,14") != std::string::npos);
}
