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

#include "qgt/ewl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgt {
namespace {

constexpr double kPi = std::numbers::pi;

double phi_high(StrategySpace space) {
  return space == StrategySpace::kFullSU2 ? kPi : kPi / 2;
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    out[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return out;
}

// Grid axes for one player's strategy under the given space.
struct GridAxes {
  std::vector<double> thetas, phis, psis;
};

GridAxes make_axes(StrategySpace space, const GridSpec& grid) {
  if (grid.theta_points < 2 ||
      (space != StrategySpace::kClassical && grid.phi_points < 2) ||
      (space == StrategySpace::kFullSU2 && grid.psi_points < 2)) {
    throw std::invalid_argument("grid needs at least 2 points per parameter");
  }
  GridAxes axes;
  axes.thetas = linspace(0, kPi, grid.theta_points);
  axes.phis = space == StrategySpace::kClassical
                  ? std::vector<double>{0.0}
                  : linspace(0, phi_high(space), grid.phi_points);
  axes.psis = space == StrategySpace::kFullSU2
                  ? linspace(0, kPi, grid.psi_points)
                  : std::vector<double>{0.0};
  return axes;
}

bool on_axis(const std::vector<double>& axis, double value, double tol = 1e-9) {
  for (double a : axis) {
    if (std::abs(a - value) <= tol) return true;
  }
  return false;
}

}  // namespace

const char* to_string(StrategySpace space) {
  switch (space) {
    case StrategySpace::kClassical: return "classical";
    case StrategySpace::kTwoParameter: return "two_parameter";
    case StrategySpace::kFullSU2: return "full_su2";
  }
  return "unknown";
}

StrategySpace strategy_space_from_string(const std::string& name) {
  if (name == "classical") return StrategySpace::kClassical;
  if (name == "two_parameter") return StrategySpace::kTwoParameter;
  if (name == "full_su2") return StrategySpace::kFullSU2;
  throw std::invalid_argument("unknown strategy space: " + name);
}

void validate_config(const QuantumGameConfig& config) {
  const int n = config.n_players();
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("quantum game needs 2 to 8 players");
  }
  for (int p = 0; p < n; ++p) {
    if (config.base_game.num_strategies(p) != 2) {
      throw std::invalid_argument(
          "base game must have exactly 2 strategies per player");
    }
  }
  if (config.gamma < 0 || config.gamma > kPi / 2) {
    throw std::invalid_argument("gamma must lie in [0, pi/2]");
  }
}

void validate_profile(const QuantumGameConfig& config,
                      const std::vector<EWLStrategy>& profile) {
  if (static_cast<int>(profile.size()) != config.n_players()) {
    throw std::invalid_argument("profile size does not match player count");
  }
  for (const EWLStrategy& s : profile) {
    if (s.theta < 0 || s.theta > kPi) {
      throw std::invalid_argument("theta out of [0, pi]");
    }
    if (s.phi < 0 || s.phi > phi_high(config.space)) {
      throw std::invalid_argument("phi out of range for this strategy space");
    }
    if (s.psi < 0 || s.psi > kPi) {
      throw std::invalid_argument("psi out of [0, pi]");
    }
    if (config.space == StrategySpace::kClassical && s.phi != 0.0) {
      throw std::invalid_argument("classical space requires phi = 0");
    }
    if (config.space != StrategySpace::kFullSU2 && s.psi != 0.0) {
      throw std::invalid_argument("psi is only available in the full_su2 space");
    }
  }
}

PlayResult play(const QuantumGameConfig& config,
                const std::vector<EWLStrategy>& profile) {
  validate_config(config);
  validate_profile(config, profile);
  const int n = config.n_players();

  const CMatrix j = entangler(config.gamma, n);
  StateVector psi = basis_state(n, 0);
  psi.amplitudes = j * psi.amplitudes;
  for (int p = 0; p < n; ++p) {
    psi = apply(strategy_unitary(profile[p]), psi, {p});
  }
  psi.amplitudes = j.adjoint() * psi.amplitudes;

  PlayResult result;
  result.distribution = outcome_distribution(psi);
  result.payoffs = Eigen::VectorXd::Zero(n);
  for (int b = 0; b < psi.dim(); ++b) {
    if (result.distribution[b] == 0.0) continue;
    const StrategyProfile outcome = config.base_game.profile_at(b);
    for (int p = 0; p < n; ++p) {
      result.payoffs[p] +=
          result.distribution[b] * config.base_game.payoff(p, outcome);
    }
  }
  return result;
}

BestResponse best_response(const QuantumGameConfig& config,
                           const std::vector<EWLStrategy>& profile, int player,
                           const GridSpec& grid) {
  validate_config(config);
  validate_profile(config, profile);
  if (player < 0 || player >= config.n_players()) {
    throw std::invalid_argument("player index out of range");
  }
  const GridAxes axes = make_axes(config.space, grid);

  BestResponse best;
  bool first = true;
  std::vector<EWLStrategy> trial = profile;
  for (double theta : axes.thetas) {
    for (double phi : axes.phis) {
      for (double psi : axes.psis) {
        trial[player] = EWLStrategy{theta, phi, psi};
        const double value = play(config, trial).payoffs[player];
        // Improvements inside the payoff tolerance count as ties, which the
        // earlier grid point wins.
        if (first || value > best.payoff + kPayoffEps) {
          best = BestResponse{trial[player], value};
          first = false;
        }
      }
    }
  }
  return best;
}

NashCheckResult is_nash_on_grid(const QuantumGameConfig& config,
                                const std::vector<EWLStrategy>& profile,
                                const GridSpec& grid, double epsilon) {
  validate_config(config);
  validate_profile(config, profile);
  const GridAxes axes = make_axes(config.space, grid);
  for (const EWLStrategy& s : profile) {
    if (!on_axis(axes.thetas, s.theta) || !on_axis(axes.phis, s.phi) ||
        !on_axis(axes.psis, s.psi)) {
      throw std::invalid_argument("profile point does not lie on the grid");
    }
  }

  const Eigen::VectorXd base = play(config, profile).payoffs;
  NashCheckResult result;
  for (int p = 0; p < config.n_players(); ++p) {
    const BestResponse reply = best_response(config, profile, p, grid);
    const double gain = reply.payoff - base[p];
    if (gain > epsilon && (result.is_nash || gain > result.gain)) {
      result.is_nash = false;
      result.player = p;
      result.deviation = reply.strategy;
      result.gain = gain;
    }
  }
  return result;
}

std::vector<SweepRow> gamma_sweep(const QuantumGameConfig& config,
                                  const std::vector<EWLStrategy>& profile,
                                  int samples, const GridSpec& grid,
                                  double epsilon) {
  if (samples < 2) throw std::invalid_argument("sweep needs at least 2 samples");
  std::vector<SweepRow> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    QuantumGameConfig at = config;
    at.gamma = kPi / 2 * i / (samples - 1);
    SweepRow row;
    row.gamma = at.gamma;
    row.payoffs = play(at, profile).payoffs;
    row.is_nash = is_nash_on_grid(at, profile, grid, epsilon).is_nash;
    rows.push_back(std::move(row));
  }
  return rows;
}

EWLStrategy cooperate_strategy() { return {0.0, 0.0, 0.0}; }
EWLStrategy defect_strategy() { return {kPi, 0.0, 0.0}; }
EWLStrategy quantum_strategy() { return {0.0, kPi / 2, 0.0}; }

std::vector<EWLStrategy> parse_profile_letters(const std::string& letters) {
  std::vector<EWLStrategy> profile;
  profile.reserve(letters.size());
  for (char ch : letters) {
    switch (ch) {
      case 'C': case 'c': profile.push_back(cooperate_strategy()); break;
      case 'D': case 'd': profile.push_back(defect_strategy()); break;
      case 'Q': case 'q': profile.push_back(quantum_strategy()); break;
      default:
        throw std::invalid_argument(std::string("unknown strategy letter '") +
                                    ch + "' (expected C, D or Q)");
    }
  }
  return profile;
}

NormalFormGame make_symmetric_game(int n_players,
                                   const Eigen::VectorXd& cooperate_payoffs,
                                   const Eigen::VectorXd& defect_payoffs) {
  if (n_players < 2) throw std::invalid_argument("need at least 2 players");
  if (cooperate_payoffs.size() != n_players || defect_payoffs.size() != n_players) {
    throw std::invalid_argument(
        "payoff rules need one entry per count of cooperating opponents "
        "(0..n-1)");
  }
  const int profiles = 1 << n_players;
  Eigen::MatrixXd table(profiles, n_players);
  for (int b = 0; b < profiles; ++b) {
    for (int p = 0; p < n_players; ++p) {
      const bool defects = (b >> (n_players - 1 - p)) & 1;
      int others_cooperating = 0;
      for (int q = 0; q < n_players; ++q) {
        if (q != p && !((b >> (n_players - 1 - q)) & 1)) ++others_cooperating;
      }
      table(b, p) = defects ? defect_payoffs[others_cooperating]
                            : cooperate_payoffs[others_cooperating];
    }
  }
  std::vector<std::vector<std::string>> sets(n_players, {"C", "D"});
  return NormalFormGame(std::move(sets), std::move(table));
}

}  // namespace qgt
