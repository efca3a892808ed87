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

#include "qgt/qmech.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qgt {
namespace {

QuantumGameConfig scenario_config(const QuantumMechanismScenario& s) {
  return QuantumGameConfig{
      make_symmetric_game(s.n_agents, s.pd.cooperate, s.pd.defect), s.gamma,
      StrategySpace::kTwoParameter};
}

}  // namespace

SymmetricPdPayoffs default_pd_payoffs(int n_players) {
  if (n_players < 2) throw std::invalid_argument("need at least 2 players");
  SymmetricPdPayoffs pd;
  pd.cooperate = Eigen::VectorXd(n_players);
  pd.defect = Eigen::VectorXd(n_players);
  for (int k = 0; k < n_players; ++k) {
    pd.cooperate[k] = 3.0 * k / (n_players - 1);
    pd.defect[k] = 1.0 + 4.0 * k / (n_players - 1);
  }
  return pd;
}

void validate_scenario(const QuantumMechanismScenario& s) {
  if (s.n_agents < 2 || s.n_agents > kMaxQubits) {
    throw std::invalid_argument("scenario needs 2 to 8 agents");
  }
  if (s.pd.cooperate.size() != s.n_agents || s.pd.defect.size() != s.n_agents) {
    throw std::invalid_argument(
        "payoff rules need one entry per count of cooperating opponents");
  }
  for (int k = 0; k < s.n_agents; ++k) {
    if (s.pd.defect[k] <= s.pd.cooperate[k]) {
      throw std::invalid_argument(
          "not a dilemma: defection must strictly dominate (fails at " +
          std::to_string(k) + " cooperating opponents)");
    }
  }
  if (s.pd.cooperate[s.n_agents - 1] <= s.pd.defect[0]) {
    throw std::invalid_argument(
        "not a dilemma: full cooperation must beat full defection");
  }
  if (s.gamma < 0 || s.gamma > std::numbers::pi / 2) {
    throw std::invalid_argument("gamma must lie in [0, pi/2]");
  }
  const std::set<std::string> known{"default", "always_true", "always_false",
                                    "gamma_at_least"};
  if (!known.contains(s.lambda.name)) {
    throw std::invalid_argument("unknown lambda predicate: " + s.lambda.name);
  }
  if (s.lambda.name == "gamma_at_least" &&
      !s.lambda.params.contains("min_gamma")) {
    throw std::invalid_argument("gamma_at_least requires a min_gamma parameter");
  }
  if (s.linked) {
    validate_environment(s.linked->env);
    validate_scr(s.linked->scr, s.linked->env);
    if (s.linked->env.n_agents() != s.n_agents) {
      throw std::invalid_argument("linked rule disagrees on the agent count");
    }
    if (s.linked->equilibrium_outcome.size() != s.linked->env.states.size() ||
        s.linked->collusive_outcome.size() != s.linked->env.states.size()) {
      throw std::invalid_argument(
          "equilibrium and collusive outcomes must cover every state");
    }
    for (int state = 0; state < s.linked->env.n_states(); ++state) {
      if (!s.linked->scr.contains(state, s.linked->equilibrium_outcome[state])) {
        throw std::invalid_argument(
            "the equilibrium outcome must be selected by the rule");
      }
    }
  }
}

ClassicalEquilibrium classical_equilibrium(
    const QuantumMechanismScenario& scenario) {
  validate_scenario(scenario);
  ClassicalEquilibrium eq;
  eq.profile.choices.assign(scenario.n_agents, 1);  // all defect
  eq.payoffs = Eigen::VectorXd::Constant(scenario.n_agents,
                                         scenario.pd.defect[0]);
  return eq;
}

QuantumEquilibriumReport quantum_equilibrium_check(
    const QuantumMechanismScenario& scenario, const GridSpec& grid) {
  validate_scenario(scenario);
  const QuantumGameConfig config = scenario_config(scenario);
  const std::vector<EWLStrategy> all_q(scenario.n_agents, quantum_strategy());

  QuantumEquilibriumReport report;
  report.all_q_payoffs = play(config, all_q).payoffs;
  report.nash_detail = is_nash_on_grid(config, all_q, grid);
  report.all_q_is_nash = report.nash_detail.is_nash;
  const Eigen::VectorXd all_d = classical_equilibrium(scenario).payoffs;
  report.pareto_improves =
      (report.all_q_payoffs.array() > all_d.array()).all();
  return report;
}

bool evaluate_condition_lambda(const QuantumMechanismScenario& scenario,
                               const QuantumEquilibriumReport& report) {
  validate_scenario(scenario);
  if (scenario.lambda.name == "always_true") return true;
  if (scenario.lambda.name == "always_false") return false;
  if (scenario.lambda.name == "gamma_at_least") {
    return scenario.gamma >= scenario.lambda.params.at("min_gamma");
  }
  return report.all_q_is_nash && report.pareto_improves;
}

bool evaluate_condition_lambda(const QuantumMechanismScenario& scenario,
                               const GridSpec& grid) {
  return evaluate_condition_lambda(scenario,
                                   quantum_equilibrium_check(scenario, grid));
}

const char* to_string(BreakageVerdict verdict) {
  switch (verdict) {
    case BreakageVerdict::kQuantumBroken: return "quantum-broken";
    case BreakageVerdict::kNotBroken: return "not broken";
    case BreakageVerdict::kNotClassicallyImplemented:
      return "not classically implemented";
  }
  return "unknown";
}

BreakageReport breakage_report(const QuantumMechanismScenario& scenario,
                               const GridSpec& grid) {
  validate_scenario(scenario);
  if (!scenario.linked) {
    throw std::invalid_argument("breakage report requires a linked rule");
  }
  const LinkedScr& linked = *scenario.linked;

  BreakageReport report;
  const CanonicalMechanism canonical = canonical_mechanism(
      linked.scr, linked.env, linked.integer_cap);
  const Mechanism mechanism = canonical.as_mechanism();
  report.classical = implements(linked.scr, mechanism, linked.env);
  report.quantum = quantum_equilibrium_check(scenario, grid);
  report.lambda_holds = evaluate_condition_lambda(scenario, report.quantum);

  // Distribution of the entangled all-Q play; each agent's measured bit
  // selects the collusive (C) or truthful (D) message, so the modal
  // bitstring determines the outcome the designer ends up choosing.
  const QuantumGameConfig config = scenario_config(scenario);
  const std::vector<EWLStrategy> all_q(scenario.n_agents, quantum_strategy());
  const PlayResult quantum_play = play(config, all_q);
  int modal = 0;
  quantum_play.distribution.maxCoeff(&modal);

  bool any_gain = false;
  for (int state = 0; state < linked.env.n_states(); ++state) {
    BreakageRow row;
    row.state = state;
    row.classical_outcomes = report.classical.rows[state].ne_outcomes;

    // Translate the modal measured bitstring into messages and evaluate the
    // designer's rule on them: bit 0 -> collusive message, bit 1 -> truthful.
    std::vector<int> messages(scenario.n_agents);
    for (int agent = 0; agent < scenario.n_agents; ++agent) {
      const bool defected = (modal >> (scenario.n_agents - 1 - agent)) & 1;
      const int announced = defected ? linked.equilibrium_outcome[state]
                                     : linked.collusive_outcome[state];
      messages[agent] =
          canonical.encode(CanonicalMechanism::Message{state, announced, 0});
    }
    row.quantum_outcome = canonical.outcome(messages);
    row.quantum_outcome_probability = quantum_play.distribution[modal];

    const int eq = linked.equilibrium_outcome[state];
    const int collusive = linked.collusive_outcome[state];
    bool weakly_all = true, strict_some = false;
    for (int agent = 0; agent < scenario.n_agents; ++agent) {
      if (!linked.env.weakly_prefers(state, agent, collusive, eq)) {
        weakly_all = false;
      } else if (!linked.env.weakly_prefers(state, agent, eq, collusive)) {
        strict_some = true;
      }
    }
    row.collusion_gains = weakly_all && strict_some;
    any_gain |= row.collusion_gains;
    report.rows.push_back(std::move(row));
  }

  if (!report.classical.implements) {
    report.verdict = BreakageVerdict::kNotClassicallyImplemented;
    report.summary = "the canonical mechanism does not implement the rule";
  } else if (!any_gain) {
    report.verdict = BreakageVerdict::kNotBroken;
    report.summary =
        "classically implemented, not broken: the rule is efficient, the "
        "agents have nothing to gain from collusion";
  } else if (report.lambda_holds) {
    report.verdict = BreakageVerdict::kQuantumBroken;
    report.summary =
        "classically implemented, quantum-broken: entangled play sustains "
        "the collusive outcome as an equilibrium of the message game";
  } else {
    report.verdict = BreakageVerdict::kNotBroken;
    report.summary =
        "classically implemented, not broken: the lambda condition fails at "
        "this entanglement level";
  }
  return report;
}

}  // namespace qgt
