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

#include "oracles.hpp"
#include "qgt/ewl.hpp"

using namespace qgt;

namespace {

constexpr double kPi = std::numbers::pi;

QuantumGameConfig table1_config(double gamma,
                                StrategySpace space = StrategySpace::kTwoParameter) {
  return {make_prisoners_dilemma(), gamma, space};
}

std::vector<Eigen::MatrixXcd> unitaries(const std::vector<EWLStrategy>& profile) {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& s : profile) out.push_back(strategy_unitary(s));
  return out;
}

}  // namespace

TEST_CASE("mutual Q at maximal entanglement cooperates") {
  const auto result = play(table1_config(kPi / 2),
                           {quantum_strategy(), quantum_strategy()});
  CHECK(result.distribution[0b00] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.payoffs[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(result.payoffs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("mutual defection stays classical at every entanglement level") {
  for (double gamma : {0.0, 0.3, 0.9, kPi / 2}) {
    const auto result = play(table1_config(gamma),
                             {defect_strategy(), defect_strategy()});
    CHECK(result.distribution[0b11] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.payoffs[0] == doctest::Approx(1.0));
    CHECK(result.payoffs[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("the lone defector against Q is punished") {
  const auto result = play(table1_config(kPi / 2),
                           {quantum_strategy(), defect_strategy()});
  // Outcome DC: the Q player collects the temptation payoff.
  CHECK(result.distribution[0b10] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.payoffs[0] == doctest::Approx(5.0));
  CHECK(result.payoffs[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("no entanglement reduces to independent mixtures") {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> theta_dist(0, kPi);
  std::uniform_real_distribution<double> phi_dist(0, kPi / 2);
  const auto config = table1_config(0.0);
  for (int round = 0; round < 50; ++round) {
    const std::vector<EWLStrategy> profile{{theta_dist(rng), phi_dist(rng), 0},
                                           {theta_dist(rng), phi_dist(rng), 0}};
    const auto result = play(config, profile);
    const auto mixture = qgt_test::mixture_payoffs(
        config.base_game, {profile[0].theta, profile[1].theta});
    CHECK((result.payoffs - mixture).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("pipeline agrees with the reference pipeline") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> theta_dist(0, kPi);
  std::uniform_real_distribution<double> phi_dist(0, kPi / 2);
  std::uniform_real_distribution<double> gamma_dist(0, kPi / 2);
  for (int n : {2, 3}) {
    const NormalFormGame game =
        n == 2 ? make_prisoners_dilemma()
               : make_symmetric_game(3, Eigen::Vector3d(0, 1.5, 3),
                                     Eigen::Vector3d(1, 3, 5));
    for (int round = 0; round < 20; ++round) {
      const double gamma = gamma_dist(rng);
      std::vector<EWLStrategy> profile;
      for (int p = 0; p < n; ++p) {
        profile.push_back({theta_dist(rng), phi_dist(rng), 0});
      }
      const QuantumGameConfig config{game, gamma, StrategySpace::kTwoParameter};
      const auto result = play(config, profile);
      const auto oracle = qgt_test::play_oracle(game, gamma, unitaries(profile));
      CHECK((result.payoffs - oracle).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("classical profiles reproduce the payoff table at any gamma") {
  const NormalFormGame table1 = make_prisoners_dilemma();
  for (int k = 0; k < 20; ++k) {
    const double gamma = kPi / 2 * k / 19.0;
    const QuantumGameConfig config{table1, gamma, StrategySpace::kTwoParameter};
    for (int bits = 0; bits < 4; ++bits) {
      const std::vector<EWLStrategy> profile{
          (bits & 2) ? defect_strategy() : cooperate_strategy(),
          (bits & 1) ? defect_strategy() : cooperate_strategy()};
      const auto result = play(config, profile);
      const StrategyProfile classical = table1.profile_at(bits);
      for (int p = 0; p < 2; ++p) {
        CHECK(std::abs(result.payoffs[p] - table1.payoff(p, classical)) < 1e-9);
      }
      CHECK(result.distribution[bits] == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("three-player classical profiles reproduce the expanded table") {
  const NormalFormGame game = make_symmetric_game(
      3, Eigen::Vector3d(0, 1.5, 3), Eigen::Vector3d(1, 3, 5));
  for (double gamma : {0.0, 0.4, 1.0, kPi / 2}) {
    const QuantumGameConfig config{game, gamma, StrategySpace::kTwoParameter};
    for (int bits = 0; bits < 8; ++bits) {
      std::vector<EWLStrategy> profile;
      for (int p = 0; p < 3; ++p) {
        profile.push_back((bits >> (2 - p)) & 1 ? defect_strategy()
                                                : cooperate_strategy());
      }
      const auto result = play(config, profile);
      CHECK(result.distribution[bits] == doctest::Approx(1.0).epsilon(1e-9));
      const StrategyProfile classical = game.profile_at(bits);
      for (int p = 0; p < 3; ++p) {
        CHECK(std::abs(result.payoffs[p] - game.payoff(p, classical)) < 1e-9);
      }
    }
  }
}

TEST_CASE("expected payoffs stay inside the base game's range") {
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> theta_dist(0, kPi);
  std::uniform_real_distribution<double> phi_dist(0, kPi / 2);
  const auto config = table1_config(1.1);
  for (int round = 0; round < 30; ++round) {
    const std::vector<EWLStrategy> profile{{theta_dist(rng), phi_dist(rng), 0},
                                           {theta_dist(rng), phi_dist(rng), 0}};
    const auto result = play(config, profile);
    for (int p = 0; p < 2; ++p) {
      CHECK(result.payoffs[p] >= config.base_game.min_payoff(p) - 1e-9);
      CHECK(result.payoffs[p] <= config.base_game.max_payoff(p) + 1e-9);
    }
  }
}

TEST_CASE("distribution always sums to one") {
  std::mt19937 rng(56);
  std::uniform_real_distribution<double> angle(0, kPi / 2);
  const auto config = table1_config(angle(rng));
  for (int round = 0; round < 20; ++round) {
    const std::vector<EWLStrategy> profile{{angle(rng) * 2, angle(rng), 0},
                                           {angle(rng) * 2, angle(rng), 0}};
    CHECK(play(config, profile).distribution.sum() ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("best response to a defector without entanglement is defection") {
  const auto best =
      best_response(table1_config(0.0), {cooperate_strategy(), defect_strategy()},
                    0, GridSpec{33, 17, 9});
  CHECK(best.strategy.theta == doctest::Approx(kPi));
  CHECK(best.strategy.phi == 0.0);  // lexicographic tie-break across phi
  CHECK(best.payoff == doctest::Approx(1.0));
}

TEST_CASE("best response to Q at maximal entanglement is Q") {
  const auto best =
      best_response(table1_config(kPi / 2),
                    {cooperate_strategy(), quantum_strategy()}, 0,
                    GridSpec{33, 17, 9});
  CHECK(best.strategy.theta == 0.0);
  CHECK(best.strategy.phi == doctest::Approx(kPi / 2));
  CHECK(best.payoff == doctest::Approx(3.0));
}

TEST_CASE("constant game: tie-break returns the first grid point") {
  Eigen::MatrixXd flat = Eigen::MatrixXd::Constant(4, 2, 1.0);
  const QuantumGameConfig config{
      NormalFormGame({{"C", "D"}, {"C", "D"}}, flat), kPi / 4,
      StrategySpace::kTwoParameter};
  const auto best = best_response(config, {cooperate_strategy(),
                                           cooperate_strategy()}, 0);
  CHECK(best.strategy.theta == 0.0);
  CHECK(best.strategy.phi == 0.0);
}

TEST_CASE("equilibrium checks on the default grid") {
  const std::vector<EWLStrategy> qq{quantum_strategy(), quantum_strategy()};
  const std::vector<EWLStrategy> dd{defect_strategy(), defect_strategy()};

  CHECK(is_nash_on_grid(table1_config(kPi / 2), qq).is_nash);

  const auto broken = is_nash_on_grid(table1_config(kPi / 2), dd);
  CHECK(!broken.is_nash);
  CHECK(broken.gain == doctest::Approx(4.0));  // deviating to Q earns 5 over 1

  CHECK(is_nash_on_grid(table1_config(0.0), dd).is_nash);
  CHECK(!is_nash_on_grid(table1_config(0.0), qq).is_nash);
}

TEST_CASE("off-grid profiles are rejected") {
  const std::vector<EWLStrategy> off{{0.1234, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(is_nash_on_grid(table1_config(0.5), off),
                  std::invalid_argument);
}

TEST_CASE("three-angle space finds the counter to mutual Q") {
  const auto result = is_nash_on_grid(
      table1_config(kPi / 2, StrategySpace::kFullSU2),
      {quantum_strategy(), quantum_strategy()}, GridSpec{9, 9, 9});
  CHECK(!result.is_nash);
  CHECK(result.gain > 1e-9);
  // The winning deviation is the full bit flip with a quarter-turn phase.
  CHECK(result.deviation.theta == doctest::Approx(kPi));
  CHECK(result.deviation.psi == doctest::Approx(kPi / 2));
  CHECK(result.gain == doctest::Approx(2.0));
}

TEST_CASE("gamma sweep endpoints and ordering") {
  const std::vector<EWLStrategy> qq{quantum_strategy(), quantum_strategy()};
  const auto rows = gamma_sweep(table1_config(0.0), qq, 9);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().gamma == 0.0);
  CHECK(rows.back().gamma == doctest::Approx(kPi / 2));
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].gamma > rows[i - 1].gamma);
  }
  // Q acts as a pure phase on the initial state at both endpoints: mutual
  // cooperation and the (3,3) payoffs.
  CHECK(rows.front().payoffs[0] == doctest::Approx(3.0));
  CHECK(rows.back().payoffs[0] == doctest::Approx(3.0));
  CHECK(!rows.front().is_nash);
  CHECK(rows.back().is_nash);
}

TEST_CASE("mutual defection sweeps flat") {
  const std::vector<EWLStrategy> dd{defect_strategy(), defect_strategy()};
  for (const auto& row : gamma_sweep(table1_config(0.0), dd, 5)) {
    CHECK(row.payoffs[0] == doctest::Approx(1.0));
    CHECK(row.payoffs[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("sweep rows reproduce individual calls") {
  const std::vector<EWLStrategy> qq{quantum_strategy(), quantum_strategy()};
  const auto rows = gamma_sweep(table1_config(0.0), qq, 5);
  for (const auto& row : rows) {
    QuantumGameConfig config = table1_config(row.gamma);
    CHECK((play(config, qq).payoffs - row.payoffs).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(is_nash_on_grid(config, qq).is_nash == row.is_nash);
  }
  CHECK_THROWS_AS(gamma_sweep(table1_config(0.0), qq, 1), std::invalid_argument);
}

TEST_CASE("profile and config validation") {
  const auto config = table1_config(0.5);
  CHECK_THROWS_AS(play(config, {quantum_strategy()}), std::invalid_argument);
  CHECK_THROWS_AS(play(table1_config(2.0), {quantum_strategy(),
                                            quantum_strategy()}),
                  std::invalid_argument);

  // phi is confined to [0, pi/2] outside the three-angle space.
  CHECK_THROWS_AS(play(config, {{0, 2.0, 0}, {0, 0, 0}}), std::invalid_argument);
  // psi only exists in the three-angle space.
  CHECK_THROWS_AS(play(config, {{0, 0, 0.5}, {0, 0, 0}}), std::invalid_argument);
  // classical space means theta only.
  QuantumGameConfig classical = table1_config(0.5, StrategySpace::kClassical);
  CHECK_THROWS_AS(play(classical, {quantum_strategy(), cooperate_strategy()}),
                  std::invalid_argument);
  // 3-strategy base games are out.
  Eigen::MatrixXd wide = Eigen::MatrixXd::Zero(6, 2);
  const NormalFormGame bad({{"a", "b", "c"}, {"x", "y"}}, wide);
  CHECK_THROWS_AS(
      validate_config(QuantumGameConfig{bad, 0.1, StrategySpace::kClassical}),
      std::invalid_argument);
}

TEST_CASE("symmetric game expansion") {
  const NormalFormGame two =
      make_symmetric_game(2, Eigen::Vector2d(0, 3), Eigen::Vector2d(1, 5));
  CHECK((two.payoff_table() - make_prisoners_dilemma().payoff_table()).norm() ==
        0.0);

  const NormalFormGame three = make_symmetric_game(
      3, Eigen::Vector3d(0, 1.5, 3), Eigen::Vector3d(1, 3, 5));
  // DCC: the defector faces two cooperators, each cooperator sees one.
  const StrategyProfile dcc{{1, 0, 0}};
  CHECK(three.payoff(0, dcc) == 5.0);
  CHECK(three.payoff(1, dcc) == 1.5);
  CHECK(three.payoff(2, dcc) == 1.5);
  const StrategyProfile ddd{{1, 1, 1}};
  for (int p = 0; p < 3; ++p) CHECK(three.payoff(p, ddd) == 1.0);

  CHECK_THROWS_AS(
      make_symmetric_game(3, Eigen::Vector2d(0, 3), Eigen::Vector2d(1, 5)),
      std::invalid_argument);
}

TEST_CASE("profile letters") {
  const auto profile = parse_profile_letters("CDQ");
  REQUIRE(profile.size() == 3);
  CHECK(profile[0].theta == 0.0);
  CHECK(profile[1].theta == doctest::Approx(kPi));
  CHECK(profile[2].phi == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(parse_profile_letters("CX"), std::invalid_argument);
}
