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

#ifndef QGT_TYPOLOGY_HPP_
#define QGT_TYPOLOGY_HPP_

#include <string>

namespace qgt {

// Protocol facts that distinguish the variants of the dilemma.
struct GameProtocol {
  bool has_arbitrator = false;        // an external party assigns payoffs
  bool pre_play_communication = false;  // players can talk before moving
  bool binding_contracts = false;     // agreements are enforceable
};

enum class PDType {
  kType1,  // no arbitrator; payoffs generated by the players themselves
  kType2,  // arbitrator, no pre-play communication
  kType3,  // arbitrator and communication, but no binding contracts
  kCooperativeExcluded,  // binding contracts make it a cooperative game
};

const char* to_string(PDType type);

// Derives the type label. Throws std::invalid_argument if the protocol
// claims binding contracts without communication.
PDType classify(const GameProtocol& protocol);

struct QuantumAdmissibility {
  bool admits = false;
  std::string reason;
};

// Whether an entangled-strategy extension of the dilemma makes sense for
// this protocol type. Only Type3 qualifies: those players can communicate
// and can therefore entangle their own qubits without help from the
// arbitrator.
QuantumAdmissibility admits_quantum_extension(PDType type);

}  // namespace qgt

#endif  // QGT_TYPOLOGY_HPP_
