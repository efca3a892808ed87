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

#ifndef QGT_GAME_HPP_
#define QGT_GAME_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qgt {

// Absolute tolerance used when comparing payoffs. Payoffs in the shipped
// games are small integers, so exact comparisons would also work; the
// tolerance is kept configurable per call.
inline constexpr double kPayoffEps = 1e-12;

// One pure strategy per player, stored as indices into the players'
// strategy sets. Profiles compare lexicographically by these indices.
struct StrategyProfile {
  std::vector<int> choices;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

// A finite n-player game in normal form. Payoffs are stored as a dense
// matrix with one row per strategy profile (row-major over the Cartesian
// product of strategy sets, last player's index fastest) and one column
// per player.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<std::vector<std::string>> strategy_sets,
                 Eigen::MatrixXd payoffs);

  int num_players() const { return static_cast<int>(strategy_sets_.size()); }
  int num_strategies(int player) const {
    return static_cast<int>(strategy_sets_.at(player).size());
  }
  int num_profiles() const { return static_cast<int>(payoffs_.rows()); }
  const std::vector<std::string>& strategies(int player) const {
    return strategy_sets_.at(player);
  }

  int profile_index(const StrategyProfile& profile) const;
  StrategyProfile profile_at(int index) const;

  double payoff(int player, const StrategyProfile& profile) const {
    return payoffs_(profile_index(profile), player);
  }
  const Eigen::MatrixXd& payoff_table() const { return payoffs_; }

  // Concatenated strategy labels, e.g. "DD" for mutual defection.
  std::string profile_label(const StrategyProfile& profile) const;

  double min_payoff(int player) const { return payoffs_.col(player).minCoeff(); }
  double max_payoff(int player) const { return payoffs_.col(player).maxCoeff(); }

 private:
  std::vector<std::vector<std::string>> strategy_sets_;
  Eigen::MatrixXd payoffs_;  // num_profiles x num_players
};

// Profiles where no player has a strictly profitable unilateral deviation,
// in lexicographic order.
std::vector<StrategyProfile> find_pure_nash(const NormalFormGame& game,
                                            double eps = kPayoffEps);

struct DominantStrategy {
  int strategy = 0;
  bool strict = false;  // strictly best against every opponent profile
};

// Per player: the strategy that is weakly best against every opponent
// profile and strictly best against at least one, if any. With
// `include_pure_ties` a strategy that merely ties everywhere also counts.
std::vector<std::optional<DominantStrategy>> dominant_strategies(
    const NormalFormGame& game, double eps = kPayoffEps,
    bool include_pure_ties = false);

// Profiles not Pareto-dominated: no other profile is weakly better for
// everyone and strictly better for someone. Never empty for a finite game.
std::vector<StrategyProfile> pareto_optimal_profiles(const NormalFormGame& game,
                                                     double eps = kPayoffEps);

// True iff the game is a symmetric 2x2 game whose payoffs satisfy
// T > R > P > S, reading the first strategy as "cooperate" and the second
// as "defect" (R = u(C,C), T = u(D,C), P = u(D,D), S = u(C,D)).
// `require_iterated_condition` additionally demands 2R > T + S.
// Throws std::invalid_argument for games that are not 2x2 or not symmetric.
bool is_prisoners_dilemma(const NormalFormGame& game, double eps = kPayoffEps,
                          bool require_iterated_condition = false);

// The canonical two-player dilemma: (C,C)=(R,R), (C,D)=(S,T), (D,C)=(T,S),
// (D,D)=(P,P). Defaults are the classic 5/3/1/0 table.
NormalFormGame make_prisoners_dilemma(double r = 3.0, double s = 0.0,
                                      double t = 5.0, double p = 1.0);

}  // namespace qgt

#endif  // QGT_GAME_HPP_
