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

#include "qgt/game.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qgt {
namespace {

std::string describe_profile(const StrategyProfile& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.choices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p.choices[i]);
  }
  return out + ")";
}

}  // namespace

NormalFormGame::NormalFormGame(std::vector<std::vector<std::string>> strategy_sets,
                               Eigen::MatrixXd payoffs)
    : strategy_sets_(std::move(strategy_sets)), payoffs_(std::move(payoffs)) {
  if (strategy_sets_.size() < 2) {
    throw std::invalid_argument("game needs at least 2 players");
  }
  long long profiles = 1;
  for (const auto& set : strategy_sets_) {
    if (set.empty()) throw std::invalid_argument("empty strategy set");
    std::set<std::string> unique(set.begin(), set.end());
    if (unique.size() != set.size()) {
      throw std::invalid_argument("duplicate strategy labels for a player");
    }
    profiles *= static_cast<long long>(set.size());
  }
  if (payoffs_.rows() != profiles ||
      payoffs_.cols() != static_cast<long long>(strategy_sets_.size())) {
    throw std::invalid_argument(
        "payoff table must cover every profile: expected " +
        std::to_string(profiles) + " rows x " +
        std::to_string(strategy_sets_.size()) + " cols, got " +
        std::to_string(payoffs_.rows()) + " x " + std::to_string(payoffs_.cols()));
  }
  if (!payoffs_.allFinite()) {
    throw std::invalid_argument("payoffs must be finite");
  }
}

int NormalFormGame::profile_index(const StrategyProfile& profile) const {
  if (profile.choices.size() != strategy_sets_.size()) {
    throw std::invalid_argument("profile arity mismatch");
  }
  int index = 0;
  for (int p = 0; p < num_players(); ++p) {
    int c = profile.choices[p];
    if (c < 0 || c >= num_strategies(p)) {
      throw std::invalid_argument("strategy out of range in profile " +
                                  describe_profile(profile));
    }
    index = index * num_strategies(p) + c;
  }
  return index;
}

StrategyProfile NormalFormGame::profile_at(int index) const {
  StrategyProfile p;
  p.choices.assign(num_players(), 0);
  for (int i = num_players() - 1; i >= 0; --i) {
    p.choices[i] = index % num_strategies(i);
    index /= num_strategies(i);
  }
  return p;
}

std::string NormalFormGame::profile_label(const StrategyProfile& profile) const {
  std::string out;
  for (int p = 0; p < num_players(); ++p) {
    out += strategy_sets_[p][profile.choices[p]];
  }
  return out;
}

std::vector<StrategyProfile> find_pure_nash(const NormalFormGame& game,
                                            double eps) {
  std::vector<StrategyProfile> result;
  for (int idx = 0; idx < game.num_profiles(); ++idx) {
    StrategyProfile profile = game.profile_at(idx);
    bool stable = true;
    for (int p = 0; p < game.num_players() && stable; ++p) {
      const double base = game.payoff(p, profile);
      StrategyProfile deviated = profile;
      for (int alt = 0; alt < game.num_strategies(p); ++alt) {
        if (alt == profile.choices[p]) continue;
        deviated.choices[p] = alt;
        if (game.payoff(p, deviated) > base + eps) {
          stable = false;
          break;
        }
      }
    }
    if (stable) result.push_back(std::move(profile));
  }
  return result;
}

std::vector<std::optional<DominantStrategy>> dominant_strategies(
    const NormalFormGame& game, double eps, bool include_pure_ties) {
  std::vector<std::optional<DominantStrategy>> result(game.num_players());
  for (int p = 0; p < game.num_players(); ++p) {
    for (int cand = 0; cand < game.num_strategies(p); ++cand) {
      bool weakly_best = true;
      bool strict_everywhere = true;
      bool strict_somewhere = false;
      // Walk every opponent profile once, comparing cand against all
      // alternatives of player p in that context.
      for (int idx = 0; idx < game.num_profiles() && weakly_best; ++idx) {
        StrategyProfile profile = game.profile_at(idx);
        if (profile.choices[p] != cand) continue;
        const double own = game.payoff(p, profile);
        StrategyProfile other = profile;
        for (int alt = 0; alt < game.num_strategies(p); ++alt) {
          if (alt == cand) continue;
          other.choices[p] = alt;
          const double theirs = game.payoff(p, other);
          if (own < theirs - eps) {
            weakly_best = false;
            break;
          }
          if (own > theirs + eps) {
            strict_somewhere = true;
          } else {
            strict_everywhere = false;
          }
        }
      }
      if (game.num_strategies(p) == 1) {
        weakly_best = false;  // nothing to dominate
      }
      if (weakly_best && (strict_somewhere || include_pure_ties)) {
        result[p] = DominantStrategy{cand, strict_everywhere && strict_somewhere};
        break;
      }
    }
  }
  return result;
}

std::vector<StrategyProfile> pareto_optimal_profiles(const NormalFormGame& game,
                                                     double eps) {
  std::vector<StrategyProfile> result;
  const auto& table = game.payoff_table();
  for (int idx = 0; idx < game.num_profiles(); ++idx) {
    bool dominated = false;
    for (int other = 0; other < game.num_profiles() && !dominated; ++other) {
      if (other == idx) continue;
      bool weakly_better_all = true;
      bool strictly_better_some = false;
      for (int p = 0; p < game.num_players(); ++p) {
        if (table(other, p) < table(idx, p) - eps) {
          weakly_better_all = false;
          break;
        }
        if (table(other, p) > table(idx, p) + eps) strictly_better_some = true;
      }
      dominated = weakly_better_all && strictly_better_some;
    }
    if (!dominated) result.push_back(game.profile_at(idx));
  }
  return result;
}

bool is_prisoners_dilemma(const NormalFormGame& game, double eps,
                          bool require_iterated_condition) {
  if (game.num_players() != 2 || game.num_strategies(0) != 2 ||
      game.num_strategies(1) != 2) {
    throw std::invalid_argument("dilemma check requires a 2x2 game");
  }
  const auto& t = game.payoff_table();
  // Symmetry: u1(i,j) == u2(j,i). Rows are CC, CD, DC, DD.
  if (std::abs(t(0, 0) - t(0, 1)) > eps || std::abs(t(3, 0) - t(3, 1)) > eps ||
      std::abs(t(1, 0) - t(2, 1)) > eps || std::abs(t(1, 1) - t(2, 0)) > eps) {
    throw std::invalid_argument("dilemma check requires a symmetric game");
  }
  const double r = t(0, 0);  // u(C,C)
  const double s = t(1, 0);  // cooperator against defector
  const double dt = t(2, 0);  // defector against cooperator
  const double p = t(3, 0);  // u(D,D)
  bool ordered = dt > r + eps && r > p + eps && p > s + eps;
  if (ordered && require_iterated_condition) {
    ordered = 2.0 * r > dt + s + eps;
  }
  return ordered;
}

NormalFormGame make_prisoners_dilemma(double r, double s, double t, double p) {
  Eigen::MatrixXd payoffs(4, 2);
  payoffs << r, r,  // CC
             s, t,  // CD
             t, s,  // DC
             p, p;  // DD
  return NormalFormGame({{"C", "D"}, {"C", "D"}}, payoffs);
}

}  // namespace qgt
