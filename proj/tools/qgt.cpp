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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgt/ewl.hpp"
#include "qgt/game.hpp"
#include "qgt/io.hpp"
#include "qgt/mechanism.hpp"
#include "qgt/qmech.hpp"
#include "qgt/typology.hpp"

namespace {

using namespace qgt;

constexpr double kPi = std::numbers::pi;

std::string num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string payoff_tuple(const Eigen::VectorXd& payoffs) {
  std::string out = "(";
  for (int i = 0; i < payoffs.size(); ++i) {
    if (i > 0) out += ", ";
    out += num(payoffs[i]);
  }
  return out + ")";
}

std::string profile_text(const NormalFormGame& game, const StrategyProfile& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.choices.size(); ++i) {
    if (i > 0) out += ",";
    out += game.strategies(static_cast<int>(i))[p.choices[i]];
  }
  return out + ")";
}

bool symmetric_profile(const StrategyProfile& p) {
  for (size_t i = 1; i < p.choices.size(); ++i) {
    if (p.choices[i] != p.choices[0]) return false;
  }
  return true;
}

Eigen::VectorXd payoff_vector(const NormalFormGame& game,
                              const StrategyProfile& p) {
  Eigen::VectorXd v(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) v[i] = game.payoff(i, p);
  return v;
}

int run_classical_solve(const std::string& path) {
  const NormalFormGame game = load_game(path);
  std::cout << "game: " << game.num_players() << " players\n";
  std::cout << "strategies:";
  for (int p = 0; p < game.num_players(); ++p) {
    std::cout << " [";
    const auto& set = game.strategies(p);
    for (size_t i = 0; i < set.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << set[i];
    }
    std::cout << ']';
  }
  std::cout << "\npure Nash equilibria:\n";
  const auto nash = find_pure_nash(game);
  if (nash.empty()) std::cout << "  none\n";
  for (const auto& p : nash) {
    std::cout << "  " << profile_text(game, p) << "  payoffs "
              << payoff_tuple(payoff_vector(game, p)) << '\n';
  }
  std::cout << "dominant strategies:\n";
  const auto dominant = dominant_strategies(game);
  for (int p = 0; p < game.num_players(); ++p) {
    std::cout << "  player " << (p + 1) << ": ";
    if (dominant[p]) {
      std::cout << game.strategies(p)[dominant[p]->strategy]
                << (dominant[p]->strict ? " (strict)" : " (weak)");
    } else {
      std::cout << "none";
    }
    std::cout << '\n';
  }
  std::cout << "Pareto-optimal profiles:\n";
  for (const auto& p : pareto_optimal_profiles(game)) {
    std::cout << "  " << profile_text(game, p)
              << (symmetric_profile(p) ? " *" : "  ") << " payoffs "
              << payoff_tuple(payoff_vector(game, p)) << '\n';
  }
  std::cout << "(* symmetric profile)\n";
  std::cout << "prisoners-dilemma: ";
  try {
    std::cout << (is_prisoners_dilemma(game) ? "true" : "false") << '\n';
  } catch (const std::invalid_argument&) {
    std::cout << "not applicable (requires a symmetric 2x2 game)\n";
  }
  return 0;
}

int run_classify(bool arbitrator, bool communication, bool binding) {
  const GameProtocol protocol{arbitrator, communication, binding};
  const PDType type = classify(protocol);
  std::cout << "protocol: arbitrator=" << (arbitrator ? "yes" : "no")
            << " communication=" << (communication ? "yes" : "no")
            << " binding-contracts=" << (binding ? "yes" : "no") << '\n';
  std::cout << "type: " << to_string(type) << '\n';
  const QuantumAdmissibility verdict = admits_quantum_extension(type);
  std::cout << "quantum extension admissible: " << (verdict.admits ? "yes" : "no")
            << '\n';
  std::cout << "reason: " << verdict.reason << '\n';
  return 0;
}

struct QuantumOptions {
  std::string profile_letters = "QQ";
  std::string game_path;
  std::string space = "two_parameter";
  double gamma = kPi / 2;
  int theta_points = 33;
  int phi_points = 17;
  int psi_points = 9;
  double epsilon = 1e-9;
};

QuantumGameConfig build_config(const QuantumOptions& options, int n_players) {
  NormalFormGame game =
      options.game_path.empty()
          ? (n_players == 2
                 ? make_prisoners_dilemma()
                 : make_symmetric_game(n_players,
                                       default_pd_payoffs(n_players).cooperate,
                                       default_pd_payoffs(n_players).defect))
          : load_game(options.game_path);
  return QuantumGameConfig{std::move(game), options.gamma,
                           strategy_space_from_string(options.space)};
}

int run_quantum_play(const QuantumOptions& options) {
  const auto profile = parse_profile_letters(options.profile_letters);
  const auto config = build_config(options, static_cast<int>(profile.size()));
  const PlayResult result = play(config, profile);
  std::cout << "players: " << config.n_players() << "  gamma: " << num(config.gamma)
            << "  space: " << to_string(config.space) << "  profile: "
            << options.profile_letters << '\n';
  std::cout << "outcome distribution:\n";
  for (int b = 0; b < result.distribution.size(); ++b) {
    if (result.distribution[b] > 1e-12) {
      std::cout << "  " << basis_label(config.n_players(), b) << "  "
                << num(result.distribution[b]) << '\n';
    }
  }
  std::cout << "expected payoffs: " << payoff_tuple(result.payoffs) << '\n';
  return 0;
}

int run_quantum_nash_check(const QuantumOptions& options) {
  const auto profile = parse_profile_letters(options.profile_letters);
  const auto config = build_config(options, static_cast<int>(profile.size()));
  const GridSpec grid{options.theta_points, options.phi_points,
                      options.psi_points};
  const NashCheckResult result =
      is_nash_on_grid(config, profile, grid, options.epsilon);
  std::cout << "profile " << options.profile_letters << " at gamma="
            << num(config.gamma) << ", space=" << to_string(config.space)
            << ", grid " << grid.theta_points << 'x' << grid.phi_points;
  if (config.space == StrategySpace::kFullSU2) std::cout << 'x' << grid.psi_points;
  std::cout << ", epsilon=" << num(options.epsilon) << '\n';
  if (result.is_nash) {
    std::cout << "Nash on grid: yes\n";
  } else {
    std::cout << "Nash on grid: no\n";
    std::cout << "witness: player " << (result.player + 1)
              << " deviates to theta=" << num(result.deviation.theta)
              << " phi=" << num(result.deviation.phi);
    if (config.space == StrategySpace::kFullSU2) {
      std::cout << " psi=" << num(result.deviation.psi);
    }
    std::cout << " gain=" << num(result.gain) << '\n';
  }
  return 0;
}

int run_quantum_sweep(const QuantumOptions& options, int steps,
                      const std::string& out_path, const std::string& format) {
  const auto profile = parse_profile_letters(options.profile_letters);
  const auto config = build_config(options, static_cast<int>(profile.size()));
  const GridSpec grid{options.theta_points, options.phi_points,
                      options.psi_points};
  const auto rows = gamma_sweep(config, profile, steps, grid, options.epsilon);
  if (format == "table") {
    std::cout << "gamma";
    for (int p = 1; p <= config.n_players(); ++p) std::cout << "  payoff_" << p;
    std::cout << "  is_nash\n";
    for (const SweepRow& row : rows) {
      std::cout << num(row.gamma);
      for (int p = 0; p < config.n_players(); ++p)
        std::cout << "  " << num(row.payoffs[p]);
      std::cout << "  " << (row.is_nash ? "true" : "false") << '\n';
    }
    return 0;
  }
  if (out_path.empty()) {
    write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write to " + out_path);
    write_sweep_csv(out, rows);
  }
  return 0;
}

int run_mech_check(const std::string& path, bool monotonic_check) {
  const ScrFixture fixture = load_scr(path);
  if (monotonic_check) {
    const MonotonicityResult result = is_monotonic(fixture.scr, fixture.env);
    std::cout << "monotonic: " << (result.monotonic ? "true" : "false") << '\n';
    if (result.witness) {
      std::cout << "witness: outcome " << fixture.env.outcomes[result.witness->outcome]
                << " selected at " << fixture.env.states[result.witness->from_state]
                << ", falls nowhere moving to "
                << fixture.env.states[result.witness->to_state]
                << ", yet is not selected there\n";
    }
  } else {
    const NoVetoResult result = satisfies_no_veto(fixture.scr, fixture.env);
    std::cout << "no-veto: " << (result.satisfied ? "true" : "false") << '\n';
    if (result.witness) {
      std::cout << "witness: outcome " << fixture.env.outcomes[result.witness->outcome]
                << " is weakly top for all but at most one agent at state "
                << fixture.env.states[result.witness->state]
                << ", yet is not selected there\n";
    }
  }
  return 0;
}

int run_mech_implement(const std::string& path, int integer_cap,
                       const std::string& report_path) {
  const ScrFixture fixture = load_scr(path);
  const CanonicalMechanism canonical =
      canonical_mechanism(fixture.scr, fixture.env, integer_cap);
  std::cout << "canonical mechanism: " << fixture.env.n_agents()
            << " agents, integer cap " << integer_cap << ", "
            << canonical.message_count() << " messages per agent\n";
  const ImplementationReport report =
      implements(fixture.scr, canonical.as_mechanism(), fixture.env);
  std::cout << "implements: " << (report.implements ? "true" : "false") << '\n';
  std::cout << "state  F  NE-outcomes  match\n";
  for (const ImplementationRow& row : report.rows) {
    std::string f_labels, ne_labels;
    for (int a : row.f_outcomes) {
      if (!f_labels.empty()) f_labels += ';';
      f_labels += fixture.env.outcomes[a];
    }
    for (int a : row.ne_outcomes) {
      if (!ne_labels.empty()) ne_labels += ';';
      ne_labels += fixture.env.outcomes[a];
    }
    std::cout << fixture.env.states[row.state] << "  " << f_labels << "  "
              << ne_labels << "  " << (row.match ? "yes" : "no") << '\n';
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot write to " + report_path);
    write_implementation_csv(out, report, fixture.env);
  }
  return 0;
}

int run_qmech(const std::string& scenario_path, int gamma_steps,
              const std::string& out_path, const QuantumOptions& options) {
  const QuantumMechanismScenario scenario = load_scenario(scenario_path);
  const GridSpec grid{options.theta_points, options.phi_points,
                      options.psi_points};
  std::cout << "scenario: " << scenario.n_agents << " agents, gamma="
            << num(scenario.gamma) << ", lambda=" << scenario.lambda.name << '\n';
  const ClassicalEquilibrium classical = classical_equilibrium(scenario);
  std::cout << "classical equilibrium: all-D, payoffs "
            << payoff_tuple(classical.payoffs) << '\n';
  const BreakageReport report = breakage_report(scenario, grid);
  std::cout << "all-Q payoffs: " << payoff_tuple(report.quantum.all_q_payoffs)
            << '\n';
  std::cout << "all-Q is grid Nash: "
            << (report.quantum.all_q_is_nash ? "yes" : "no") << '\n';
  std::cout << "pareto improves: "
            << (report.quantum.pareto_improves ? "yes" : "no") << '\n';
  std::cout << "condition lambda: "
            << (report.lambda_holds ? "holds" : "does not hold") << '\n';
  std::cout << "verdict: " << to_string(report.verdict) << '\n';
  std::cout << report.summary << '\n';
  const Environment& env = scenario.linked->env;
  std::cout << "state  classical-NE-outcomes  quantum-outcome  collusion-gains\n";
  for (const BreakageRow& row : report.rows) {
    std::string classical_labels;
    for (int a : row.classical_outcomes) {
      if (!classical_labels.empty()) classical_labels += ';';
      classical_labels += env.outcomes[a];
    }
    std::cout << env.states[row.state] << "  " << classical_labels << "  "
              << env.outcomes[row.quantum_outcome] << " (p="
              << num(row.quantum_outcome_probability) << ")  "
              << (row.collusion_gains ? "yes" : "no") << '\n';
  }
  if (gamma_steps > 0) {
    QuantumGameConfig config{
        make_symmetric_game(scenario.n_agents, scenario.pd.cooperate,
                            scenario.pd.defect),
        scenario.gamma, StrategySpace::kTwoParameter};
    const std::vector<EWLStrategy> all_q(scenario.n_agents, quantum_strategy());
    const auto rows = gamma_sweep(config, all_q, gamma_steps, grid);
    std::cout << "all-Q sweep:\ngamma  payoffs  is_nash\n";
    for (const SweepRow& row : rows) {
      std::cout << num(row.gamma) << "  " << payoff_tuple(row.payoffs) << "  "
                << (row.is_nash ? "true" : "false") << '\n';
    }
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write to " + out_path);
    write_breakage_csv(out, report, env);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum games and implementation toolkit"};
  app.set_version_flag("--version", "qgt 1.0.0");
  app.require_subcommand(1);

  // classical solve <game.json>
  auto* classical = app.add_subcommand("classical", "classical game analysis");
  classical->require_subcommand(1);
  auto* solve = classical->add_subcommand("solve", "equilibria, dominance, Pareto set");
  std::string game_path;
  solve->add_option("game", game_path, "game JSON file")->required();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "protocol typology");
  bool arbitrator = false, communication = false, binding = false;
  classify_cmd->add_flag("--arbitrator", arbitrator, "an arbitrator assigns payoffs");
  classify_cmd->add_flag("--communication", communication,
                         "players can communicate before moving");
  classify_cmd->add_flag("--binding", binding, "agreements are enforceable");

  // quantum play|sweep|nash-check
  QuantumOptions qopts;
  int sweep_steps = 9;
  std::string sweep_out, sweep_format = "csv";
  auto* quantum = app.add_subcommand("quantum", "entangled play");
  quantum->require_subcommand(1);
  auto add_quantum_options = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--profile", qopts.profile_letters,
                    "per-player strategy letters (C, D, Q)");
    cmd->add_option("--game", qopts.game_path, "base game JSON file");
    cmd->add_option("--gamma", qopts.gamma, "entanglement level in [0, pi/2]");
    cmd->add_option("--space", qopts.space,
                    "classical | two_parameter | full_su2");
    if (with_grid) {
      cmd->add_option("--theta-points", qopts.theta_points, "grid points for theta");
      cmd->add_option("--phi-points", qopts.phi_points, "grid points for phi");
      cmd->add_option("--psi-points", qopts.psi_points, "grid points for psi");
      cmd->add_option("--epsilon", qopts.epsilon, "equilibrium tolerance");
    }
  };
  auto* play_cmd = quantum->add_subcommand("play", "one shot of the protocol");
  add_quantum_options(play_cmd, false);
  auto* nash_cmd = quantum->add_subcommand("nash-check",
                                           "grid equilibrium check");
  add_quantum_options(nash_cmd, true);
  auto* sweep_cmd = quantum->add_subcommand("sweep", "payoffs across gamma");
  add_quantum_options(sweep_cmd, true);
  sweep_cmd->add_option("--gamma-steps", sweep_steps, "number of gamma samples");
  sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");
  sweep_cmd->add_option("--format", sweep_format, "csv | table");

  // mech check-monotonic|check-no-veto|implement
  auto* mech = app.add_subcommand("mech", "implementation checks");
  mech->require_subcommand(1);
  std::string scr_path;
  int integer_cap = 2;
  std::string report_path;
  auto* mono_cmd = mech->add_subcommand("check-monotonic", "monotonicity scan");
  mono_cmd->add_option("file", scr_path, "environment+rule JSON file")->required();
  auto* veto_cmd = mech->add_subcommand("check-no-veto", "no-veto scan");
  veto_cmd->add_option("file", scr_path, "environment+rule JSON file")->required();
  auto* implement_cmd = mech->add_subcommand("implement",
                                             "canonical mechanism + exact Nash sets");
  implement_cmd->add_option("file", scr_path, "environment+rule JSON file")
      ->required();
  implement_cmd->add_option("--integer-cap", integer_cap, "rule-3 integer cap");
  implement_cmd->add_option("--report", report_path, "per-state CSV output path");

  // qmech run
  auto* qmech = app.add_subcommand("qmech", "entangled play against a rule");
  qmech->require_subcommand(1);
  auto* qmech_run = qmech->add_subcommand("run", "breakage report");
  std::string scenario_path;
  int qmech_gamma_steps = 0;
  std::string qmech_out;
  qmech_run->add_option("--scenario", scenario_path, "scenario JSON file")
      ->required();
  qmech_run->add_option("--gamma-steps", qmech_gamma_steps,
                        "also sweep all-Q across this many gamma samples");
  qmech_run->add_option("--out", qmech_out, "per-state CSV output path");
  qmech_run->add_option("--theta-points", qopts.theta_points, "grid points for theta");
  qmech_run->add_option("--phi-points", qopts.phi_points, "grid points for phi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors
  }

  try {
    if (solve->parsed()) return run_classical_solve(game_path);
    if (classify_cmd->parsed()) {
      return run_classify(arbitrator, communication, binding);
    }
    if (play_cmd->parsed()) return run_quantum_play(qopts);
    if (nash_cmd->parsed()) return run_quantum_nash_check(qopts);
    if (sweep_cmd->parsed()) {
      return run_quantum_sweep(qopts, sweep_steps, sweep_out, sweep_format);
    }
    if (mono_cmd->parsed()) return run_mech_check(scr_path, true);
    if (veto_cmd->parsed()) return run_mech_check(scr_path, false);
    if (implement_cmd->parsed()) {
      return run_mech_implement(scr_path, integer_cap, report_path);
    }
    if (qmech_run->parsed()) {
      return run_qmech(scenario_path, qmech_gamma_steps, qmech_out, qopts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
