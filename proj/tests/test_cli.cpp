#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "json.hpp"

// CARLITZ_CLI is injected by the build as the path of the CLI binary.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(CARLITZ_CLI) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("zeta window: schema and the worked q = 3 example") {
  auto r = run_cli("fmzv --p 3 --e 1 --s 1 --prime-deg-max 2 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "fmzv");
  CHECK(j["q"] == 3);
  CHECK(j.contains("params"));
  REQUIRE(j["results"]["entries"].size() == 6);
  CHECK(j["results"]["excluded"].empty());
  CHECK(j["results"]["label"] == "zeta(1)");
  CHECK(j["results"]["entries"][3]["prime"] == "[1,0,1]");
  CHECK(j["results"]["entries"][3]["residue"] == "[1,1]");
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
  auto bad_p = run_cli("fmzv --p 4 --e 1 --s 1 --prime-deg-max 1", true);
  CHECK(bad_p.code == 2);
  CHECK(bad_p.out.find("NonPrimeP") != std::string::npos);

  CHECK(run_cli("fmzv --p 3 --s 1", true).code == 2);        // no primes selected
  CHECK(run_cli("fmzv --p 3 --prime-deg-max 1", true).code == 2);  // missing --s
  CHECK(run_cli("nonsense", true).code == 2);
  CHECK(run_cli("fcmpl --p 3 --s 1 --prime-deg-max 1", true).code == 2);  // missing --u
  auto bad_prime = run_cli("fmzv --p 3 --s 1 --prime \"[1,0,1,1]\"", true);
  CHECK(bad_prime.code == 2);
  CHECK(bad_prime.out.find("NotIrreducible") != std::string::npos);
}

TEST_CASE("verification sweeps exit 0 when the identities hold") {
  CHECK(run_cli("verify main-theorem --p 3 --e 1 --weight-max 3 --prime-deg-max 2").code == 0);
  CHECK(run_cli("verify interpolation --p 2 --s-max 3 --i-max 2").code == 0);
  CHECK(run_cli("verify stuffle --p 3 --weight-max 2 --prime-deg-max 2 --points 2").code == 0);
  CHECK(run_cli("verify truncated-chang --p 2 --weight-max 2 --d 2").code == 0);
  CHECK(run_cli("verify main-theorem --p 3 --s 1,1 --prime \"[1,0,1]\"").code == 0);
}

TEST_CASE("polylog window records exclusions") {
  auto r = run_cli("fcmpl --p 3 --s 1 --u 1/[0,1] --prime-deg-max 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["entries"].size() == 5);
  REQUIRE(j["results"]["excluded"].size() == 1);
  CHECK(j["results"]["excluded"][0]["prime"] == "[0,1]");
}

TEST_CASE("AT polynomials over F_4 via --q") {
  auto r = run_cli("at-poly --q 4 --nmax 4");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["q"] == 4);
  REQUIRE(j["results"].size() == 5);
  for (int n = 0; n <= 3; ++n) {  // H_n = 1 up to q - 1
    REQUIRE(j["results"][n].size() == 1);
    CHECK(j["results"][n][0][0] == 0);
    CHECK(j["results"][n][0][1] == "[1]");
  }
  CHECK(j["results"][4].size() > 1);  // H_q is not constant
}

TEST_CASE("discovery emits the recovered relation") {
  auto r = run_cli("discover --p 3 --s 1 --s2 1 --probe-deg-max 3 --validate-deg-max 4");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["unknowns"][0] == "1,1");
  CHECK(j["results"]["unknowns"][1] == "2");
  CHECK(j["results"]["coefficients"][0] == 2);
  CHECK(j["results"]["coefficients"][1] == 1);
  CHECK(j["results"]["stabilized"] == true);
}

TEST_CASE("CSV mode") {
  auto r = run_cli("fmzv --p 3 --s 1 --prime-deg-max 1 --csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("kind,prime,value\n", 0) == 0);
  CHECK(r.out.find("entry,\"[0,1]\",[1]") != std::string::npos);

  auto v = run_cli("verify interpolation --p 2 --s 1 --i 1 --csv");
  REQUIRE(v.code == 0);
  CHECK(v.out.rfind("identity,params,lhs,rhs,status\n", 0) == 0);
  CHECK(v.out.find("pass") != std::string::npos);

  auto a = run_cli("at-poly --q 2 --nmax 2 --csv");
  REQUIRE(a.code == 0);
  CHECK(a.out.rfind("n,t_exp,coeff\n", 0) == 0);
  CHECK(a.out.find("2,1,[1]") != std::string::npos);  // H_2 = t + theta^2 at q = 2
}

TEST_CASE("seeded single-pair stuffle check") {
  auto r = run_cli("verify stuffle --p 3 --s 1 --s2 2 --prime-deg-max 2 --points 3 --seed 5");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"].size() == 18);  // 6 primes x 3 points
  CHECK(run_cli("verify stuffle --p 3 --s 1 --prime-deg-max 1", true).code == 2);
}

TEST_CASE("the emitted params reconstruct the run") {
  // round-trip: params -> flags -> identical bytes
  auto first = run_cli("fmzv --p 3 --e 1 --s 2,1 --prime-deg-max 2");
  REQUIRE(first.code == 0);
  auto j = nlohmann::json::parse(first.out);
  const auto& p = j["params"];
  std::string args = "fmzv --p " + std::to_string(p["p"].get<int>()) + " --e " +
                     std::to_string(p["e"].get<int>()) + " --s " +
                     p["s"].get<std::string>() + " --prime-deg-max " +
                     std::to_string(p["prime_deg_max"].get<int>()) + " --budget " +
                     std::to_string(p["budget"].get<uint64_t>());
  auto second = run_cli(args);
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("output bytes do not depend on repetition or --jobs") {
  const std::string args =
      "verify main-theorem --p 3 --e 1 --weight-max 3 --prime-deg-max 2 --json";
  auto a = run_cli(args + " --jobs 1");
  auto b = run_cli(args + " --jobs 1");
  auto c = run_cli(args + " --jobs 4");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const std::string stuffle =
      "verify stuffle --p 2 --weight-max 2 --prime-deg-max 2 --points 3 --seed 9";
  CHECK(run_cli(stuffle + " --jobs 1").out == run_cli(stuffle + " --jobs 4").out);
}
