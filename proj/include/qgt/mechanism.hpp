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

#ifndef QGT_MECHANISM_HPP_
#define QGT_MECHANISM_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qgt {

// Finite implementation environments: agents, outcomes, states, and one
// weak preference ordering per (agent, state), stored as integer ranks
// (higher is better; equal ranks are ties).
struct Environment {
  std::vector<std::string> outcomes;
  std::vector<std::string> states;
  // ranks[state](agent, outcome)
  std::vector<Eigen::MatrixXi> ranks;

  int n_agents() const {
    return ranks.empty() ? 0 : static_cast<int>(ranks.front().rows());
  }
  int n_outcomes() const { return static_cast<int>(outcomes.size()); }
  int n_states() const { return static_cast<int>(states.size()); }
  int rank(int state, int agent, int outcome) const {
    return ranks.at(state)(agent, outcome);
  }
  // a weakly preferred to b by `agent` at `state`.
  bool weakly_prefers(int state, int agent, int a, int b) const {
    return rank(state, agent, a) >= rank(state, agent, b);
  }
  bool weakly_top(int state, int agent, int outcome) const;
};

// Throws std::invalid_argument on inconsistent shapes.
void validate_environment(const Environment& env);

// State -> nonempty set of desired outcomes (sorted outcome indices).
struct SocialChoiceRule {
  std::vector<std::vector<int>> selected;

  bool contains(int state, int outcome) const;
};

void validate_scr(const SocialChoiceRule& scr, const Environment& env);

// A finite message game: per-agent message space sizes plus an outcome
// function over message profiles.
class Mechanism {
 public:
  Mechanism(std::vector<int> message_counts,
            std::function<int(const std::vector<int>&)> outcome_fn);

  int n_agents() const { return static_cast<int>(message_counts_.size()); }
  int message_count(int agent) const { return message_counts_.at(agent); }
  long long num_profiles() const;
  int outcome(const std::vector<int>& messages) const {
    return outcome_fn_(messages);
  }

 private:
  std::vector<int> message_counts_;
  std::function<int(const std::vector<int>&)> outcome_fn_;
};

struct MonotonicityWitness {
  int from_state = 0;
  int to_state = 0;
  int outcome = 0;
};

struct MonotonicityResult {
  bool monotonic = true;
  std::optional<MonotonicityWitness> witness;
};

// Exhaustive check: if a is selected at `from`, and a falls in nobody's
// ranking relative to any alternative when moving to `to` (every outcome a
// weakly beat, it still weakly beats), then a must be selected at `to`.
MonotonicityResult is_monotonic(const SocialChoiceRule& scr,
                                const Environment& env);

struct NoVetoWitness {
  int state = 0;
  int outcome = 0;
};

struct NoVetoResult {
  bool satisfied = true;
  std::optional<NoVetoWitness> witness;
};

// If at some state all but at most one agent rank an outcome weakly top,
// that outcome must be selected there.
NoVetoResult satisfies_no_veto(const SocialChoiceRule& scr,
                               const Environment& env);

// The constructive message game behind the sufficiency direction. Each
// agent announces (state, outcome, z) with z in 0..integer_cap:
//   rule 1  all agents announce the same (state, outcome) with the outcome
//           selected there -> that outcome;
//   rule 2  exactly n-1 agents announce such a pair and one deviant
//           announces (s', a', z') -> a' if the consensus outcome is weakly
//           preferred to a' by the deviant at the consensus state, else the
//           consensus outcome;
//   rule 3  otherwise the agent with the highest z (ties -> lowest agent
//           index) dictates their announced outcome.
class CanonicalMechanism {
 public:
  struct Message {
    int state = 0;
    int outcome = 0;
    int z = 0;
  };

  CanonicalMechanism(SocialChoiceRule scr, Environment env, int integer_cap);

  int message_count() const {
    return env_.n_states() * env_.n_outcomes() * (integer_cap_ + 1);
  }
  Message decode(int message) const;
  int encode(const Message& message) const;
  int outcome(const std::vector<int>& messages) const;
  // Which rule fired for this profile (1, 2 or 3).
  int rule(const std::vector<int>& messages) const;
  Mechanism as_mechanism() const;

  int integer_cap() const { return integer_cap_; }
  const Environment& environment() const { return env_; }

 private:
  int evaluate(const std::vector<int>& messages, int* rule_out) const;

  SocialChoiceRule scr_;
  Environment env_;
  int integer_cap_;
};

// Requires n >= 3 agents (the hypothesis of the sufficiency construction)
// and integer_cap >= 1.
CanonicalMechanism canonical_mechanism(const SocialChoiceRule& scr,
                                       const Environment& env,
                                       int integer_cap = 2);

// Exact pure Nash set of the message game under the preferences at `state`,
// by exhaustive unilateral-deviation checking; profiles in lexicographic
// order. Throws if the profile space exceeds `guard`.
std::vector<std::vector<int>> nash_equilibria(const Mechanism& mechanism,
                                              const Environment& env, int state,
                                              long long guard = 10'000'000);

struct ImplementationRow {
  int state = 0;
  std::vector<int> f_outcomes;   // sorted
  std::vector<int> ne_outcomes;  // sorted, deduplicated
  bool match = false;
};

struct ImplementationReport {
  bool implements = false;
  std::vector<ImplementationRow> rows;
};

// True iff at every state the set of Nash-equilibrium outcomes equals the
// selected set.
ImplementationReport implements(const SocialChoiceRule& scr,
                                const Mechanism& mechanism,
                                const Environment& env,
                                long long guard = 10'000'000);

}  // namespace qgt

#endif  // QGT_MECHANISM_HPP_
