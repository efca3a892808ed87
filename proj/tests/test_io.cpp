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

#include <numbers>
#include <random>
#include <sstream>

#include "qgt/io.hpp"

using namespace qgt;

namespace {

std::string fixture(const std::string& name) {
  return std::string(QGT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("the shipped game fixture is the classic table") {
  const NormalFormGame game = load_game(fixture("table1.json"));
  CHECK(game.num_players() == 2);
  CHECK(game.strategies(0) == std::vector<std::string>{"C", "D"});
  CHECK((game.payoff_table() - make_prisoners_dilemma().payoff_table()).norm() ==
        0.0);
  CHECK(is_prisoners_dilemma(game));
}

TEST_CASE("game parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_game("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_game(R"({"players": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_game(R"({"players": 2,
    "strategies": [["C","D"]],
    "payoffs": [[0,0],[0,0],[0,0],[0,0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_game(R"({"players": 2,
    "strategies": [["C","D"],["C","D"]],
    "payoffs": [[0,0],[0,0],[0,0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_game(fixture("missing_file.json")),
                  std::invalid_argument);
}

TEST_CASE("the shipped rule fixtures parse and look right") {
  const ScrFixture mono = load_scr(fixture("monotonic_scr.json"));
  CHECK(mono.env.n_agents() == 3);
  CHECK(mono.env.n_outcomes() == 3);
  CHECK(mono.env.n_states() == 2);
  CHECK(mono.scr.selected == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(is_monotonic(mono.scr, mono.env).monotonic);
  CHECK(satisfies_no_veto(mono.scr, mono.env).satisfied);

  const ScrFixture nonmono = load_scr(fixture("nonmonotonic_scr.json"));
  CHECK(!is_monotonic(nonmono.scr, nonmono.env).monotonic);
}

TEST_CASE("rule parsing rejects unknown labels") {
  CHECK_THROWS_AS(parse_scr(R"({
    "agents": 2,
    "outcomes": ["a"],
    "states": ["s"],
    "preferences": {"s": [[0],[0]]},
    "scr": {"s": ["zzz"]}})"),
                  std::invalid_argument);
}

TEST_CASE("the shipped scenarios parse") {
  const QuantumMechanismScenario scenario =
      load_scenario(fixture("qmech_scenario.json"));
  CHECK(scenario.n_agents == 3);
  CHECK(scenario.gamma == doctest::Approx(std::numbers::pi / 2));
  CHECK(scenario.lambda.name == "default");
  REQUIRE(scenario.linked.has_value());
  CHECK(scenario.linked->equilibrium_outcome == std::vector<int>{0, 0});
  CHECK(scenario.linked->collusive_outcome == std::vector<int>{1, 1});
  CHECK(scenario.linked->integer_cap == 2);

  CHECK_NOTHROW(load_scenario(fixture("qmech_efficient_scenario.json")));
}

TEST_CASE("scenario parsing enforces the dilemma structure") {
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents": 3,
    "pd_payoffs": {"cooperate": [5, 6, 7], "defect": [1, 3, 5]},
    "gamma": 0.5})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents": 3,
    "pd_payoffs": {"cooperate": [0, 1.5, 3], "defect": [1, 3, 5]},
    "gamma": 0.5,
    "condition_lambda": {"name": "mystery"}})"),
                  std::invalid_argument);
}

TEST_CASE("sweep CSV round-trips exactly") {
  std::vector<SweepRow> rows;
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> dist(0, std::numbers::pi / 2);
  for (int i = 0; i < 7; ++i) {
    SweepRow row;
    row.gamma = dist(rng);
    row.payoffs = Eigen::VectorXd::Random(3) * 5.0;
    row.is_nash = i % 2 == 0;
    rows.push_back(row);
  }
  std::stringstream buffer;
  write_sweep_csv(buffer, rows);
  const auto parsed = parse_sweep_csv(buffer);
  REQUIRE(parsed.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].gamma == rows[i].gamma);  // bitwise
    CHECK((parsed[i].payoffs - rows[i].payoffs).norm() == 0.0);
    CHECK(parsed[i].is_nash == rows[i].is_nash);
  }
}

TEST_CASE("sweep CSV header and layout") {
  std::vector<SweepRow> rows(2);
  rows[0] = {0.0, Eigen::Vector2d(3, 3), false};
  rows[1] = {std::numbers::pi / 2, Eigen::Vector2d(3, 3), true};
  std::stringstream buffer;
  write_sweep_csv(buffer, rows);
  std::string line;
  std::getline(buffer, line);
  CHECK(line == "gamma,payoff_1,payoff_2,is_nash");
  std::getline(buffer, line);
  CHECK(line == "0,3,3,false");
}

TEST_CASE("sweep CSV parsing rejects damage") {
  std::stringstream bad_header("not,a,sweep\n");
  CHECK_THROWS_AS(parse_sweep_csv(bad_header), std::invalid_argument);
  std::stringstream bad_row("gamma,payoff_1,is_nash\n0.5,oops,true\n");
  CHECK_THROWS_AS(parse_sweep_csv(bad_row), std::invalid_argument);
  std::stringstream bad_bool("gamma,payoff_1,is_nash\n0.5,1,maybe\n");
  CHECK_THROWS_AS(parse_sweep_csv(bad_bool), std::invalid_argument);
}

TEST_CASE("implementation CSV round-trips") {
  const ScrFixture mono = load_scr(fixture("monotonic_scr.json"));
  ImplementationReport report;
  report.implements = false;
  report.rows = {{0, {0}, {0}, true}, {1, {1}, {0, 2}, false}};
  std::stringstream buffer;
  write_implementation_csv(buffer, report, mono.env);
  const auto parsed = parse_implementation_csv(buffer, mono.env);
  CHECK(parsed.implements == report.implements);
  REQUIRE(parsed.rows.size() == 2);
  CHECK(parsed.rows[1].state == 1);
  CHECK(parsed.rows[1].f_outcomes == std::vector<int>{1});
  CHECK(parsed.rows[1].ne_outcomes == std::vector<int>{0, 2});
  CHECK(!parsed.rows[1].match);
}

TEST_CASE("breakage CSV round-trips") {
  const QuantumMechanismScenario scenario =
      load_scenario(fixture("qmech_scenario.json"));
  BreakageReport report;
  report.rows = {{0, {0, 1}, 1, 1.0, true}, {1, {0}, 0, 0.25, false}};
  std::stringstream buffer;
  write_breakage_csv(buffer, report, scenario.linked->env);
  const auto rows = parse_breakage_csv(buffer, scenario.linked->env);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].classical_outcomes == std::vector<int>{0, 1});
  CHECK(rows[0].quantum_outcome == 1);
  CHECK(rows[0].quantum_outcome_probability == 1.0);
  CHECK(rows[0].collusion_gains);
  CHECK(rows[1].quantum_outcome_probability == 0.25);
}
