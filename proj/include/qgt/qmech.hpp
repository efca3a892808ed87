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

#ifndef QGT_QMECH_HPP_
#define QGT_QMECH_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgt/ewl.hpp"
#include "qgt/mechanism.hpp"

namespace qgt {

// Entangled play against a classically implemented social choice rule.
//
// The embedding: at the true state every agent faces a binary message
// choice — the "truthful" message that sustains the rule's equilibrium
// outcome, or a "collusive" message that would realise a better outcome if
// everyone sent it. Restricted to those two messages the message game is an
// n-player dilemma (defect = truthful), and the agents run the entangled
// protocol over exactly that choice. The designer sees the same message
// alphabet either way.

// Symmetric n-player dilemma payoffs: entry k of each vector is the payoff
// of a player choosing C / D when k of the n-1 other players cooperate.
struct SymmetricPdPayoffs {
  Eigen::VectorXd cooperate;
  Eigen::VectorXd defect;
};

// The classic table extended linearly: u(C,k) = 3k/(n-1),
// u(D,k) = 1 + 4k/(n-1). Reduces to the 5/3/1/0 table at n = 2.
SymmetricPdPayoffs default_pd_payoffs(int n_players);

// Named predicate deciding when entangled play defeats the rule.
//   "default"      all-Q is a grid Nash equilibrium and its payoffs strictly
//                  dominate the all-D payoffs;
//   "always_true" / "always_false"  constants;
//   "gamma_at_least"  gamma >= params["min_gamma"].
struct LambdaSpec {
  std::string name = "default";
  std::map<std::string, double> params;
};

// The social choice side: an implementable rule together with, per state,
// the equilibrium outcome agents are stuck with and the outcome they would
// collude towards.
struct LinkedScr {
  Environment env;
  SocialChoiceRule scr;
  std::vector<int> equilibrium_outcome;  // per state
  std::vector<int> collusive_outcome;    // per state
  int integer_cap = 2;
};

struct QuantumMechanismScenario {
  int n_agents = 3;
  SymmetricPdPayoffs pd;
  double gamma = 0.0;
  LambdaSpec lambda;
  std::optional<LinkedScr> linked;
};

// Checks the dilemma structure: defection strictly dominant against every
// cooperation count, and full cooperation strictly better for everyone than
// full defection. Throws std::invalid_argument otherwise.
void validate_scenario(const QuantumMechanismScenario& scenario);

struct ClassicalEquilibrium {
  StrategyProfile profile;   // all defect
  Eigen::VectorXd payoffs;
};

// The unique pure equilibrium of the classical dilemma (dominance).
ClassicalEquilibrium classical_equilibrium(
    const QuantumMechanismScenario& scenario);

struct QuantumEquilibriumReport {
  bool all_q_is_nash = false;
  Eigen::VectorXd all_q_payoffs;
  bool pareto_improves = false;  // strictly better than all-D for everyone
  NashCheckResult nash_detail;
};

// Runs the entangled protocol with all agents playing Q in the
// two-parameter space and checks it against the grid.
QuantumEquilibriumReport quantum_equilibrium_check(
    const QuantumMechanismScenario& scenario, const GridSpec& grid = {});

bool evaluate_condition_lambda(const QuantumMechanismScenario& scenario,
                               const QuantumEquilibriumReport& report);
bool evaluate_condition_lambda(const QuantumMechanismScenario& scenario,
                               const GridSpec& grid = {});

enum class BreakageVerdict {
  kQuantumBroken,              // implemented classically, defeated by entangled play
  kNotBroken,                  // implemented classically and still standing
  kNotClassicallyImplemented,  // the canonical mechanism fails already
};

const char* to_string(BreakageVerdict verdict);

struct BreakageRow {
  int state = 0;
  std::vector<int> classical_outcomes;  // Nash outcomes of the message game
  int quantum_outcome = 0;              // outcome of the modal measured profile
  double quantum_outcome_probability = 0.0;
  bool collusion_gains = false;  // collusive outcome Pareto-dominates equilibrium
};

struct BreakageReport {
  BreakageVerdict verdict = BreakageVerdict::kNotBroken;
  std::string summary;
  std::vector<BreakageRow> rows;
  ImplementationReport classical;
  QuantumEquilibriumReport quantum;
  bool lambda_holds = false;
};

// Full verdict: quantum-broken iff the rule is classically implemented, the
// lambda condition holds, and the collusive outcome actually improves on the
// equilibrium outcome somewhere. Requires linked_scr.
BreakageReport breakage_report(const QuantumMechanismScenario& scenario,
                               const GridSpec& grid = {});

}  // namespace qgt

#endif  // QGT_QMECH_HPP_
