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

#ifndef QGT_IO_HPP_
#define QGT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "qgt/ewl.hpp"
#include "qgt/game.hpp"
#include "qgt/mechanism.hpp"
#include "qgt/qmech.hpp"

namespace qgt {

// JSON file formats are documented in the README. All loaders throw
// std::invalid_argument with a description of what is missing or malformed.

NormalFormGame load_game(const std::string& path);
NormalFormGame parse_game(const std::string& json_text);

struct ScrFixture {
  Environment env;
  SocialChoiceRule scr;
};

ScrFixture load_scr(const std::string& path);
ScrFixture parse_scr(const std::string& json_text);

QuantumMechanismScenario load_scenario(const std::string& path);
QuantumMechanismScenario parse_scenario(const std::string& json_text);

// CSV, RFC-4180 line discipline with fixed headers; list-valued fields are
// joined with ';' so no quoting is ever required. Every writer has a parser
// that round-trips its output exactly.

// header: gamma,payoff_1,...,payoff_n,is_nash
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(std::istream& in);

// header: state,f_outcomes,ne_outcomes,match
void write_implementation_csv(std::ostream& out, const ImplementationReport& report,
                              const Environment& env);
ImplementationReport parse_implementation_csv(std::istream& in,
                                              const Environment& env);

// header: state,classical_outcomes,quantum_outcome,quantum_probability,collusion_gains
void write_breakage_csv(std::ostream& out, const BreakageReport& report,
                        const Environment& env);
std::vector<BreakageRow> parse_breakage_csv(std::istream& in,
                                            const Environment& env);

}  // namespace qgt

#endif  // QGT_IO_HPP_
