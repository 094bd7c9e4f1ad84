/* Copyright (c) 2026 The antiorb Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "antiorb/io.hpp"

namespace {

struct Result {
  int rc = -1;
  std::string out;
};

// Runs the built binary with stderr discarded.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(ANTIORB_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

antiorb::Json report(const std::string& args, int expected_rc = 0) {
  const auto r = run(args);
  INFO(args);
  REQUIRE(r.rc == expected_rc);
  return antiorb::Json::parse(r.out);
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "antiorb_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("kloosterman report") {
  const auto j = report("kloosterman --m 2 --q 3 --lambda 1");
  CHECK(j["result"]["value"] == "-1");
  CHECK(j["result"]["bound_ok"] == true);
  CHECK(j["version"] == antiorb::library_version());
  CHECK(j["config"]["m"] == 2);
  CHECK(j["config"]["lambda"] == 1);
  // K^1(lambda) = psi(lambda) is irrational.
  CHECK(report("kloosterman --m 1 --q 5 --lambda 2")["result"]["rational"] == false);
}

TEST_CASE("biorbital and orbit counts") {
  auto j = report("biorbital --m 2 --dims 1,1 --q 3");
  CHECK(j["result"]["dimension"] == 2);
  CHECK(j["result"]["aperiodic"] == 2);
  CHECK(j["result"]["match"] == true);
  CHECK(report("biorbital --m 1 --dims 2 --q 3")["result"]["dimension"] == 0);

  j = report("orbits --m 2 --dims 1,1 --q 3 --nilpotent");
  CHECK(j["result"]["count"] == 3);
  CHECK(j["result"]["points"] == 5);  // nilpotent (a, b) in F_3^2: ab = 0
  j = report("orbits --m 2 --dims 1,1 --q 3");
  CHECK(j["result"]["points"] == 9);
  CHECK(j["result"]["count"] == 5);  // three nilpotent plus ab = 1, ab = 2
}

TEST_CASE("decompose") {
  // Index 4 is (1, 1): T^2 = 1 on both vertices.
  auto j = report("decompose --m 2 --dims 1,1 --q 3 --index 4");
  CHECK(j["result"]["nilpotent"] == false);
  CHECK(j["result"]["degree_identity"] == true);
  j = report("decompose --q 3 --rep '{\"m\":2,\"eps\":1,\"dims\":[1,1],\"blocks\":[[1],[0]]}'");
  CHECK(j["result"]["nilpotent"] == true);
  CHECK(j["result"]["label_text"] == "nil=ov{0,1}");
}

TEST_CASE("commutation and cases") {
  auto j = report("verify-commutation --m 2 --dims 2,2 --q 3 --parts 1,1/1,1 --samples 2");
  CHECK(j["status"] == "pass");
  for (const auto& s : j["result"]["samples"]) CHECK(s["q_exponent"] == s["predicted_exponent"]);
  j = report("verify-commutation --kind restriction --m 2 --q 3 --parts 1,1/1,1 --samples 2 --eps -1");
  CHECK(j["status"] == "pass");

  CHECK(report("case quadric --q 3")["status"] == "pass");
  CHECK(report("case symmetric --q 3 --n 1")["status"] == "exploratory");
  CHECK(report("accept-all --profile desk --only 3 --only 6")["result"]["criteria"].size() == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("biorbital --m 2 --dims 1,1,1 --q 3").rc == 2);
  CHECK(run("kloosterman --m 2 --q 3 --lambda 0").rc == 2);
  CHECK(run("no-such-command").rc == 2);
  CHECK(run("biorbital --q 4").rc == 2);
  CHECK(run("biorbital --eps 2").rc == 2);
  CHECK(run("accept-all --profile lab").rc == 2);
  CHECK(run("case conic --q 3").rc == 2);
  CHECK(run("biorbital --m 2 --dims 2,2 --q 3 --budget 10").rc == 3);
  CHECK(run("biorbital --m 2 --dims 2,2 --q 3", "ANTIORB_BUDGET=10").rc == 3);
  CHECK(run("biorbital --m 2 --dims 2,2 --q 3", "ANTIORB_BUDGET=1e5").rc == 0);
  CHECK(run("biorbital", "ANTIORB_BUDGET=lots").rc == 2);
  CHECK(run("--help").rc == 0);
}

TEST_CASE("reports are byte-identical and tables round-trip") {
  const auto dir = scratch();
  const auto table = (dir / "ind.json").string();
  const std::string args = "induce --m 2 --dims 1,1 --q 3 --parts 1,0/0,1 --seed 7 --table-out " + table;
  REQUIRE(run(args + " --out " + (dir / "a.json").string()).rc == 0);
  REQUIRE(run(args + " --out " + (dir / "b.json").string()).rc == 0);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(!slurp(dir / "a.json").empty());

  const auto bin = (dir / "hat.bin").string();
  auto j = report("fourier --in " + table + " --table-out " + bin + " --check-naive");
  CHECK(j["result"]["naive_match"] == true);
  CHECK(j["result"]["sqrt_q_exponent"] == 2);
  // Applying the transform twice gives q^N f(-x) with N = 2.
  j = report("fourier --in " + bin + " --variant scalar --check-naive");
  CHECK(j["result"]["sqrt_q_exponent"] == 4);

  const auto csv = run("kloosterman --m 2 --q 3 --lambda 1 --format csv");
  CHECK(csv.rc == 0);
  CHECK(csv.out.find("result.bound_ok,true") != std::string::npos);
}
