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

#include "qgt/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qgt {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw std::invalid_argument("malformed JSON in " + what);
  }
  return parsed;
}

const json& require(const json& node, const std::string& key,
                    const std::string& what) {
  auto it = node.find(key);
  if (it == node.end()) {
    throw std::invalid_argument(what + ": missing field \"" + key + "\"");
  }
  return *it;
}

int outcome_index(const Environment& env, const std::string& label) {
  for (int i = 0; i < env.n_outcomes(); ++i) {
    if (env.outcomes[i] == label) return i;
  }
  throw std::invalid_argument("unknown outcome label: " + label);
}

int state_index(const Environment& env, const std::string& label) {
  for (int i = 0; i < env.n_states(); ++i) {
    if (env.states[i] == label) return i;
  }
  throw std::invalid_argument("unknown state label: " + label);
}

// 17 significant digits: parses back to the identical double.
std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == sep) {
      fields.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  fields.push_back(current);
  return fields;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

double parse_double(const std::string& field) {
  size_t used = 0;
  const double value = std::stod(field, &used);
  if (used != field.size()) {
    throw std::invalid_argument("malformed number in CSV: " + field);
  }
  return value;
}

bool parse_bool(const std::string& field) {
  if (field == "true") return true;
  if (field == "false") return false;
  throw std::invalid_argument("malformed boolean in CSV: " + field);
}

void expect_header(std::istream& in, const std::string& expected) {
  std::string line;
  if (!std::getline(in, line) || line != expected) {
    throw std::invalid_argument("expected CSV header \"" + expected + "\"");
  }
}

ScrFixture parse_scr_json(const json& root) {
  ScrFixture fixture;
  const int agents = require(root, "agents", "scr file").get<int>();
  fixture.env.outcomes =
      require(root, "outcomes", "scr file").get<std::vector<std::string>>();
  fixture.env.states =
      require(root, "states", "scr file").get<std::vector<std::string>>();
  const json& prefs = require(root, "preferences", "scr file");
  for (const std::string& state : fixture.env.states) {
    const json& table = require(prefs, state, "preferences");
    Eigen::MatrixXi ranks(agents, fixture.env.outcomes.size());
    if (static_cast<int>(table.size()) != agents) {
      throw std::invalid_argument("preferences for " + state +
                                  " must list every agent");
    }
    for (int i = 0; i < agents; ++i) {
      const auto row = table[i].get<std::vector<int>>();
      if (row.size() != fixture.env.outcomes.size()) {
        throw std::invalid_argument("rank row must cover every outcome");
      }
      for (size_t a = 0; a < row.size(); ++a) ranks(i, a) = row[a];
    }
    fixture.env.ranks.push_back(std::move(ranks));
  }
  validate_environment(fixture.env);

  const json& scr = require(root, "scr", "scr file");
  for (const std::string& state : fixture.env.states) {
    const auto labels =
        require(scr, state, "scr").get<std::vector<std::string>>();
    std::vector<int> selected;
    for (const std::string& label : labels) {
      selected.push_back(outcome_index(fixture.env, label));
    }
    std::sort(selected.begin(), selected.end());
    fixture.scr.selected.push_back(std::move(selected));
  }
  validate_scr(fixture.scr, fixture.env);
  return fixture;
}

}  // namespace

NormalFormGame parse_game(const std::string& json_text) {
  const json root = parse_json(json_text, "game file");
  const int players = require(root, "players", "game file").get<int>();
  auto strategies = require(root, "strategies", "game file")
                        .get<std::vector<std::vector<std::string>>>();
  if (static_cast<int>(strategies.size()) != players) {
    throw std::invalid_argument("game file: strategies must list every player");
  }
  const auto payoff_rows = require(root, "payoffs", "game file")
                               .get<std::vector<std::vector<double>>>();
  Eigen::MatrixXd payoffs(payoff_rows.size(), players);
  for (size_t r = 0; r < payoff_rows.size(); ++r) {
    if (static_cast<int>(payoff_rows[r].size()) != players) {
      throw std::invalid_argument("game file: each payoff row needs one value "
                                  "per player");
    }
    for (int p = 0; p < players; ++p) payoffs(r, p) = payoff_rows[r][p];
  }
  return NormalFormGame(std::move(strategies), std::move(payoffs));
}

NormalFormGame load_game(const std::string& path) {
  return parse_game(read_file(path));
}

ScrFixture parse_scr(const std::string& json_text) {
  return parse_scr_json(parse_json(json_text, "scr file"));
}

ScrFixture load_scr(const std::string& path) {
  return parse_scr(read_file(path));
}

QuantumMechanismScenario parse_scenario(const std::string& json_text) {
  const json root = parse_json(json_text, "scenario file");
  QuantumMechanismScenario scenario;
  scenario.n_agents = require(root, "agents", "scenario file").get<int>();
  const json& pd = require(root, "pd_payoffs", "scenario file");
  const auto coop = require(pd, "cooperate", "pd_payoffs").get<std::vector<double>>();
  const auto defect = require(pd, "defect", "pd_payoffs").get<std::vector<double>>();
  scenario.pd.cooperate =
      Eigen::Map<const Eigen::VectorXd>(coop.data(), coop.size());
  scenario.pd.defect =
      Eigen::Map<const Eigen::VectorXd>(defect.data(), defect.size());
  scenario.gamma = require(root, "gamma", "scenario file").get<double>();
  if (root.contains("condition_lambda")) {
    const json& lambda = root["condition_lambda"];
    scenario.lambda.name = require(lambda, "name", "condition_lambda");
    if (lambda.contains("params")) {
      for (const auto& [key, value] : lambda["params"].items()) {
        scenario.lambda.params[key] = value.get<double>();
      }
    }
  }
  if (root.contains("linked_scr")) {
    const json& linked_json = root["linked_scr"];
    LinkedScr linked;
    ScrFixture fixture = parse_scr_json(linked_json);
    linked.env = std::move(fixture.env);
    linked.scr = std::move(fixture.scr);
    linked.integer_cap = root.value("integer_cap", 2);
    const json& eq = require(linked_json, "equilibrium_outcome", "linked_scr");
    const json& collusive = require(linked_json, "collusive_outcome", "linked_scr");
    for (const std::string& state : linked.env.states) {
      linked.equilibrium_outcome.push_back(outcome_index(
          linked.env, require(eq, state, "equilibrium_outcome").get<std::string>()));
      linked.collusive_outcome.push_back(outcome_index(
          linked.env,
          require(collusive, state, "collusive_outcome").get<std::string>()));
    }
    scenario.linked = std::move(linked);
  }
  validate_scenario(scenario);
  return scenario;
}

QuantumMechanismScenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path));
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no sweep rows to write");
  const int n = static_cast<int>(rows.front().payoffs.size());
  out << "gamma";
  for (int p = 1; p <= n; ++p) out << ",payoff_" << p;
  out << ",is_nash\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.gamma);
    for (int p = 0; p < n; ++p) out << ',' << format_double(row.payoffs[p]);
    out << ',' << (row.is_nash ? "true" : "false") << '\n';
  }
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("gamma,payoff_1", 0) != 0) {
    throw std::invalid_argument("not a sweep CSV");
  }
  const int columns = static_cast<int>(split(header, ',').size());
  const int n = columns - 2;
  std::vector<SweepRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (static_cast<int>(fields.size()) != columns) {
      throw std::invalid_argument("sweep CSV row has wrong arity: " + line);
    }
    SweepRow row;
    row.gamma = parse_double(fields[0]);
    row.payoffs = Eigen::VectorXd(n);
    for (int p = 0; p < n; ++p) row.payoffs[p] = parse_double(fields[1 + p]);
    row.is_nash = parse_bool(fields[columns - 1]);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::vector<std::string> outcome_labels(const Environment& env,
                                        const std::vector<int>& outcomes) {
  std::vector<std::string> labels;
  labels.reserve(outcomes.size());
  for (int a : outcomes) labels.push_back(env.outcomes.at(a));
  return labels;
}

std::vector<int> outcome_indices(const Environment& env,
                                 const std::string& joined) {
  std::vector<int> indices;
  if (joined.empty()) return indices;
  for (const std::string& label : split(joined, ';')) {
    indices.push_back(outcome_index(env, label));
  }
  return indices;
}

}  // namespace

void write_implementation_csv(std::ostream& out,
                              const ImplementationReport& report,
                              const Environment& env) {
  out << "state,f_outcomes,ne_outcomes,match\n";
  for (const ImplementationRow& row : report.rows) {
    out << env.states.at(row.state) << ','
        << join(outcome_labels(env, row.f_outcomes), ';') << ','
        << join(outcome_labels(env, row.ne_outcomes), ';') << ','
        << (row.match ? "true" : "false") << '\n';
  }
}

ImplementationReport parse_implementation_csv(std::istream& in,
                                              const Environment& env) {
  expect_header(in, "state,f_outcomes,ne_outcomes,match");
  ImplementationReport report;
  report.implements = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw std::invalid_argument("implementation CSV row has wrong arity");
    }
    ImplementationRow row;
    row.state = state_index(env, fields[0]);
    row.f_outcomes = outcome_indices(env, fields[1]);
    row.ne_outcomes = outcome_indices(env, fields[2]);
    row.match = parse_bool(fields[3]);
    report.implements &= row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_breakage_csv(std::ostream& out, const BreakageReport& report,
                        const Environment& env) {
  out << "state,classical_outcomes,quantum_outcome,quantum_probability,"
         "collusion_gains\n";
  for (const BreakageRow& row : report.rows) {
    out << env.states.at(row.state) << ','
        << join(outcome_labels(env, row.classical_outcomes), ';') << ','
        << env.outcomes.at(row.quantum_outcome) << ','
        << format_double(row.quantum_outcome_probability) << ','
        << (row.collusion_gains ? "true" : "false") << '\n';
  }
}

std::vector<BreakageRow> parse_breakage_csv(std::istream& in,
                                            const Environment& env) {
  expect_header(in,
                "state,classical_outcomes,quantum_outcome,quantum_probability,"
                "collusion_gains");
  std::vector<BreakageRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw std::invalid_argument("breakage CSV row has wrong arity");
    }
    BreakageRow row;
    row.state = state_index(env, fields[0]);
    row.classical_outcomes = outcome_indices(env, fields[1]);
    row.quantum_outcome = outcome_index(env, fields[2]);
    row.quantum_outcome_probability = parse_double(fields[3]);
    row.collusion_gains = parse_bool(fields[4]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qgt
