// Copyright 2026 The qgt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qgt/io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const std::string command =
      std::string(QGT_BINARY_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.stdout_text.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(QGT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("classical solve prints the full analysis") {
  const RunResult result = run("classical solve " + fixture("table1.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.stdout_text.find("(D,D)  payoffs (1, 1)") != std::string::npos);
  CHECK(result.stdout_text.find("player 1: D (strict)") != std::string::npos);
  CHECK(result.stdout_text.find("(C,C) *") != std::string::npos);
  CHECK(result.stdout_text.find("prisoners-dilemma: true") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::string commands[] = {
      "classical solve " + fixture("table1.json"),
      "quantum sweep --gamma-steps 5 --profile QQ",
      "qmech run --scenario " + fixture("qmech_scenario.json"),
  };
  for (const std::string& command : commands) {
    const RunResult first = run(command);
    const RunResult second = run(command);
    CHECK(first.exit_code == 0);
    CHECK(first.stdout_text == second.stdout_text);
  }
}

TEST_CASE("classify matches the typology") {
  const RunResult t3 = run("classify --arbitrator --communication");
  CHECK(t3.exit_code == 0);
  CHECK(t3.stdout_text.find("type: type-3") != std::string::npos);
  CHECK(t3.stdout_text.find("quantum extension admissible: yes") !=
        std::string::npos);

  const RunResult t2 = run("classify --arbitrator");
  CHECK(t2.stdout_text.find("type: type-2") != std::string::npos);
  CHECK(t2.stdout_text.find("admissible: no") != std::string::npos);

  const RunResult t1 = run("classify");
  CHECK(t1.stdout_text.find("type: type-1") != std::string::npos);

  const RunResult coop = run("classify --arbitrator --communication --binding");
  CHECK(coop.stdout_text.find("type: cooperative-excluded") != std::string::npos);

  // binding without communication violates the protocol invariant
  const RunResult invalid = run("classify --arbitrator --binding");
  CHECK(invalid.exit_code == 1);
}

TEST_CASE("sweep output is a parseable CSV with the advertised rows") {
  const RunResult result = run("quantum sweep --gamma-steps 9 --profile QQ");
  CHECK(result.exit_code == 0);
  std::stringstream buffer(result.stdout_text);
  const auto rows = qgt::parse_sweep_csv(buffer);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().gamma == 0.0);
  CHECK(rows.back().gamma == doctest::Approx(1.5707963267948966));
}

TEST_CASE("mech implement reports per state") {
  const RunResult result =
      run("mech implement " + fixture("monotonic_scr.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.stdout_text.find("implements: true") != std::string::npos);
  const RunResult negative =
      run("mech implement " + fixture("nonmonotonic_scr.json"));
  CHECK(negative.exit_code == 0);
  CHECK(negative.stdout_text.find("implements: false") != std::string::npos);
}

TEST_CASE("mech checks report witnesses") {
  const RunResult mono =
      run("mech check-monotonic " + fixture("nonmonotonic_scr.json"));
  CHECK(mono.exit_code == 0);
  CHECK(mono.stdout_text.find("monotonic: false") != std::string::npos);
  CHECK(mono.stdout_text.find("witness") != std::string::npos);

  const RunResult veto = run("mech check-no-veto " + fixture("monotonic_scr.json"));
  CHECK(veto.exit_code == 0);
  CHECK(veto.stdout_text.find("no-veto: true") != std::string::npos);
}

TEST_CASE("qmech run prints the verdict") {
  const RunResult result =
      run("qmech run --scenario " + fixture("qmech_scenario.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.stdout_text.find("verdict: quantum-broken") != std::string::npos);

  const RunResult efficient =
      run("qmech run --scenario " + fixture("qmech_efficient_scenario.json"));
  CHECK(efficient.exit_code == 0);
  CHECK(efficient.stdout_text.find("verdict: not broken") != std::string::npos);
}

TEST_CASE("files the tool writes parse back with the library readers") {
  const std::string sweep_path = "/tmp/qgt_test_sweep.csv";
  const RunResult sweep = run("quantum sweep --gamma-steps 7 --profile QQ --out " +
                              sweep_path);
  CHECK(sweep.exit_code == 0);
  {
    std::ifstream in(sweep_path);
    REQUIRE(in.good());
    const auto rows = qgt::parse_sweep_csv(in);
    CHECK(rows.size() == 7);
  }

  const std::string report_path = "/tmp/qgt_test_report.csv";
  const RunResult implement = run("mech implement " +
                                  fixture("monotonic_scr.json") + " --report " +
                                  report_path);
  CHECK(implement.exit_code == 0);
  const qgt::ScrFixture mono = qgt::load_scr(fixture("monotonic_scr.json"));
  {
    std::ifstream in(report_path);
    REQUIRE(in.good());
    const auto report = qgt::parse_implementation_csv(in, mono.env);
    CHECK(report.implements);
    CHECK(report.rows.size() == 2);
  }

  const std::string breakage_path = "/tmp/qgt_test_breakage.csv";
  const RunResult qmech = run("qmech run --scenario " +
                              fixture("qmech_scenario.json") + " --out " +
                              breakage_path);
  CHECK(qmech.exit_code == 0);
  const qgt::QuantumMechanismScenario scenario =
      qgt::load_scenario(fixture("qmech_scenario.json"));
  {
    std::ifstream in(breakage_path);
    REQUIRE(in.good());
    const auto rows = qgt::parse_breakage_csv(in, scenario.linked->env);
    CHECK(rows.size() == 2);
    CHECK(rows[0].collusion_gains);
  }
  std::remove(sweep_path.c_str());
  std::remove(report_path.c_str());
  std::remove(breakage_path.c_str());
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("classical solve /no/such/file.json").exit_code == 1);
  CHECK(run("quantum play --profile QX").exit_code == 1);
  CHECK(run("quantum play --profile QQ --gamma 7").exit_code == 1);
}
