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

#include "qgt/mechanism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qgt {

bool Environment::weakly_top(int state, int agent, int outcome) const {
  for (int b = 0; b < n_outcomes(); ++b) {
    if (rank(state, agent, b) > rank(state, agent, outcome)) return false;
  }
  return true;
}

void validate_environment(const Environment& env) {
  if (env.outcomes.empty() || env.states.empty() || env.ranks.empty()) {
    throw std::invalid_argument("environment needs outcomes, states and ranks");
  }
  if (env.ranks.size() != env.states.size()) {
    throw std::invalid_argument("one rank table per state required");
  }
  const auto rows = env.ranks.front().rows();
  if (rows < 1) throw std::invalid_argument("environment needs agents");
  for (const auto& table : env.ranks) {
    if (table.rows() != rows ||
        table.cols() != static_cast<long>(env.outcomes.size())) {
      throw std::invalid_argument(
          "rank tables must be n_agents x n_outcomes for every state");
    }
  }
}

bool SocialChoiceRule::contains(int state, int outcome) const {
  const auto& sel = selected.at(state);
  return std::find(sel.begin(), sel.end(), outcome) != sel.end();
}

void validate_scr(const SocialChoiceRule& scr, const Environment& env) {
  if (scr.selected.size() != env.states.size()) {
    throw std::invalid_argument("rule must cover every state");
  }
  for (const auto& sel : scr.selected) {
    if (sel.empty()) {
      throw std::invalid_argument("rule must select at least one outcome per state");
    }
    for (int a : sel) {
      if (a < 0 || a >= env.n_outcomes()) {
        throw std::invalid_argument("selected outcome out of range");
      }
    }
  }
}

Mechanism::Mechanism(std::vector<int> message_counts,
                     std::function<int(const std::vector<int>&)> outcome_fn)
    : message_counts_(std::move(message_counts)),
      outcome_fn_(std::move(outcome_fn)) {
  if (message_counts_.empty()) throw std::invalid_argument("no agents");
  for (int m : message_counts_) {
    if (m < 1) throw std::invalid_argument("empty message space");
  }
}

long long Mechanism::num_profiles() const {
  long long total = 1;
  for (int m : message_counts_) total *= m;
  return total;
}

MonotonicityResult is_monotonic(const SocialChoiceRule& scr,
                                const Environment& env) {
  validate_environment(env);
  validate_scr(scr, env);
  for (int from = 0; from < env.n_states(); ++from) {
    for (int to = 0; to < env.n_states(); ++to) {
      for (int a : scr.selected[from]) {
        bool nowhere_fell = true;
        for (int i = 0; i < env.n_agents() && nowhere_fell; ++i) {
          for (int b = 0; b < env.n_outcomes(); ++b) {
            if (env.weakly_prefers(from, i, a, b) &&
                !env.weakly_prefers(to, i, a, b)) {
              nowhere_fell = false;
              break;
            }
          }
        }
        if (nowhere_fell && !scr.contains(to, a)) {
          return {false, MonotonicityWitness{from, to, a}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

NoVetoResult satisfies_no_veto(const SocialChoiceRule& scr,
                               const Environment& env) {
  validate_environment(env);
  validate_scr(scr, env);
  for (int state = 0; state < env.n_states(); ++state) {
    for (int a = 0; a < env.n_outcomes(); ++a) {
      int top_count = 0;
      for (int i = 0; i < env.n_agents(); ++i) {
        if (env.weakly_top(state, i, a)) ++top_count;
      }
      if (top_count >= env.n_agents() - 1 && !scr.contains(state, a)) {
        return {false, NoVetoWitness{state, a}};
      }
    }
  }
  return {true, std::nullopt};
}

CanonicalMechanism::CanonicalMechanism(SocialChoiceRule scr, Environment env,
                                       int integer_cap)
    : scr_(std::move(scr)), env_(std::move(env)), integer_cap_(integer_cap) {}

CanonicalMechanism::Message CanonicalMechanism::decode(int message) const {
  if (message < 0 || message >= message_count()) {
    throw std::invalid_argument("message index out of range");
  }
  Message m;
  m.z = message % (integer_cap_ + 1);
  message /= integer_cap_ + 1;
  m.outcome = message % env_.n_outcomes();
  m.state = message / env_.n_outcomes();
  return m;
}

int CanonicalMechanism::encode(const Message& message) const {
  return (message.state * env_.n_outcomes() + message.outcome) *
             (integer_cap_ + 1) +
         message.z;
}

int CanonicalMechanism::evaluate(const std::vector<int>& messages,
                                 int* rule_out) const {
  const int n = env_.n_agents();
  if (static_cast<int>(messages.size()) != n) {
    throw std::invalid_argument("message profile arity mismatch");
  }
  std::vector<Message> decoded(n);
  for (int i = 0; i < n; ++i) decoded[i] = decode(messages[i]);

  auto same_pair = [](const Message& a, const Message& b) {
    return a.state == b.state && a.outcome == b.outcome;
  };

  // Rule 1: unanimity on a selected (state, outcome).
  bool unanimous = true;
  for (int i = 1; i < n; ++i) unanimous &= same_pair(decoded[i], decoded[0]);
  if (unanimous && scr_.contains(decoded[0].state, decoded[0].outcome)) {
    if (rule_out) *rule_out = 1;
    return decoded[0].outcome;
  }

  // Rule 2: exactly n-1 agents on a selected pair, one lone deviant. The
  // deviant's outcome is granted only if it does not strictly improve on
  // the consensus outcome for the deviant at the consensus state.
  for (int j = 0; j < n; ++j) {
    const Message& ref = decoded[(j + 1) % n];
    bool others_agree = true;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      others_agree &= same_pair(decoded[i], ref);
    }
    if (!others_agree || same_pair(decoded[j], ref)) continue;
    if (!scr_.contains(ref.state, ref.outcome)) continue;
    if (rule_out) *rule_out = 2;
    if (env_.weakly_prefers(ref.state, j, ref.outcome, decoded[j].outcome)) {
      return decoded[j].outcome;
    }
    return ref.outcome;
  }

  // Rule 3: integer game.
  int winner = 0;
  for (int i = 1; i < n; ++i) {
    if (decoded[i].z > decoded[winner].z) winner = i;
  }
  if (rule_out) *rule_out = 3;
  return decoded[winner].outcome;
}

int CanonicalMechanism::outcome(const std::vector<int>& messages) const {
  return evaluate(messages, nullptr);
}

int CanonicalMechanism::rule(const std::vector<int>& messages) const {
  int rule = 0;
  evaluate(messages, &rule);
  return rule;
}

Mechanism CanonicalMechanism::as_mechanism() const {
  CanonicalMechanism copy = *this;
  return Mechanism(std::vector<int>(env_.n_agents(), message_count()),
                   [copy](const std::vector<int>& m) { return copy.outcome(m); });
}

CanonicalMechanism canonical_mechanism(const SocialChoiceRule& scr,
                                       const Environment& env,
                                       int integer_cap) {
  validate_environment(env);
  validate_scr(scr, env);
  if (env.n_agents() < 3) {
    throw std::invalid_argument(
        "the canonical construction requires at least 3 agents");
  }
  if (integer_cap < 1) throw std::invalid_argument("integer cap must be >= 1");
  return CanonicalMechanism(scr, env, integer_cap);
}

std::vector<std::vector<int>> nash_equilibria(const Mechanism& mechanism,
                                              const Environment& env, int state,
                                              long long guard) {
  validate_environment(env);
  if (mechanism.n_agents() != env.n_agents()) {
    throw std::invalid_argument("mechanism and environment disagree on agents");
  }
  if (state < 0 || state >= env.n_states()) {
    throw std::invalid_argument("state out of range");
  }
  if (mechanism.num_profiles() > guard) {
    throw std::invalid_argument("message profile space exceeds the guard");
  }

  const int n = mechanism.n_agents();
  std::vector<std::vector<int>> equilibria;
  std::vector<int> profile(n, 0);
  while (true) {
    const int base_outcome = mechanism.outcome(profile);
    bool stable = true;
    std::vector<int> trial = profile;
    for (int i = 0; i < n && stable; ++i) {
      const int base_rank = env.rank(state, i, base_outcome);
      for (int alt = 0; alt < mechanism.message_count(i); ++alt) {
        if (alt == profile[i]) continue;
        trial[i] = alt;
        if (env.rank(state, i, mechanism.outcome(trial)) > base_rank) {
          stable = false;
          break;
        }
      }
      trial[i] = profile[i];
    }
    if (stable) equilibria.push_back(profile);

    int pos = n - 1;
    while (pos >= 0 && ++profile[pos] == mechanism.message_count(pos)) {
      profile[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return equilibria;
}

ImplementationReport implements(const SocialChoiceRule& scr,
                                const Mechanism& mechanism,
                                const Environment& env, long long guard) {
  validate_scr(scr, env);
  ImplementationReport report;
  report.implements = true;
  for (int state = 0; state < env.n_states(); ++state) {
    ImplementationRow row;
    row.state = state;
    row.f_outcomes = scr.selected[state];
    std::sort(row.f_outcomes.begin(), row.f_outcomes.end());
    std::set<int> reached;
    for (const auto& profile : nash_equilibria(mechanism, env, state, guard)) {
      reached.insert(mechanism.outcome(profile));
    }
    row.ne_outcomes.assign(reached.begin(), reached.end());
    row.match = row.ne_outcomes == row.f_outcomes;
    report.implements &= row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qgt
