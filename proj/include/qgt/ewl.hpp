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

#ifndef QGT_EWL_HPP_
#define QGT_EWL_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgt/game.hpp"
#include "qgt/quantum.hpp"

namespace qgt {

// The quantised dilemma protocol: prepare |0...0>, entangle with J(gamma),
// apply one local strategy unitary per player, disentangle with J^dagger,
// measure in the computational basis, and pay according to the classical
// payoff table.

enum class StrategySpace {
  kClassical,     // theta only; phi = psi = 0
  kTwoParameter,  // theta in [0,pi], phi in [0,pi/2]; psi = 0
  kFullSU2,       // theta in [0,pi], phi in [0,pi], psi in [0,pi]
};

const char* to_string(StrategySpace space);
StrategySpace strategy_space_from_string(const std::string& name);

struct QuantumGameConfig {
  NormalFormGame base_game;  // 2 strategies per player, any player count
  double gamma = 0.0;        // [0, pi/2]
  StrategySpace space = StrategySpace::kTwoParameter;

  int n_players() const { return base_game.num_players(); }
};

// Validates player count (2..8), per-player strategy count and gamma range.
void validate_config(const QuantumGameConfig& config);

// Validates every strategy against the config's space.
void validate_profile(const QuantumGameConfig& config,
                      const std::vector<EWLStrategy>& profile);

// Grid resolutions per parameter. theta spans [0,pi]; phi spans [0,pi/2]
// in the two-parameter space and [0,pi] in the three-angle space; psi spans
// [0,pi]. Endpoints are always included.
struct GridSpec {
  int theta_points = 33;
  int phi_points = 17;
  int psi_points = 9;
};

struct PlayResult {
  Eigen::VectorXd distribution;  // over classical basis outcomes
  Eigen::VectorXd payoffs;       // expected, per player
};

PlayResult play(const QuantumGameConfig& config,
                const std::vector<EWLStrategy>& profile);

struct BestResponse {
  EWLStrategy strategy;
  double payoff = 0.0;
};

// Exhaustive search over the responder's grid, holding the other players'
// strategies fixed. Payoffs within kPayoffEps count as tied, and ties break
// lexicographically by (theta, phi, psi) grid order: the first maximiser
// encountered wins.
BestResponse best_response(const QuantumGameConfig& config,
                           const std::vector<EWLStrategy>& profile, int player,
                           const GridSpec& grid = {});

struct NashCheckResult {
  bool is_nash = true;
  // Witness of the most profitable deviation found (valid when !is_nash).
  int player = -1;
  EWLStrategy deviation;
  double gain = 0.0;
};

// True iff no player's grid deviation improves their payoff by more than
// epsilon. Profile points must lie on the grid.
NashCheckResult is_nash_on_grid(const QuantumGameConfig& config,
                                const std::vector<EWLStrategy>& profile,
                                const GridSpec& grid = {},
                                double epsilon = 1e-9);

struct SweepRow {
  double gamma = 0.0;
  Eigen::VectorXd payoffs;
  bool is_nash = false;
};

// Evaluates the fixed profile at `samples` evenly spaced gamma values over
// [0, pi/2] (endpoints included); rows are ordered by gamma.
std::vector<SweepRow> gamma_sweep(const QuantumGameConfig& config,
                                  const std::vector<EWLStrategy>& profile,
                                  int samples, const GridSpec& grid = {},
                                  double epsilon = 1e-9);

// Named strategies.
EWLStrategy cooperate_strategy();  // C: theta=0, phi=0
EWLStrategy defect_strategy();     // D: theta=pi, phi=0
EWLStrategy quantum_strategy();    // Q: theta=0, phi=pi/2

// Parses a per-player letter string such as "QQ" or "CDD".
std::vector<EWLStrategy> parse_profile_letters(const std::string& letters);

// Expands a symmetric 2-move payoff rule into a full normal-form game.
// cooperate_payoffs[k] / defect_payoffs[k] give the payoff of a player
// choosing C / D when k of the other n-1 players cooperate.
NormalFormGame make_symmetric_game(int n_players,
                                   const Eigen::VectorXd& cooperate_payoffs,
                                   const Eigen::VectorXd& defect_payoffs);

}  // namespace qgt

#endif  // QGT_EWL_HPP_
