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

#include "qgt/typology.hpp"

#include <stdexcept>

namespace qgt {

const char* to_string(PDType type) {
  switch (type) {
    case PDType::kType1: return "type-1";
    case PDType::kType2: return "type-2";
    case PDType::kType3: return "type-3";
    case PDType::kCooperativeExcluded: return "cooperative-excluded";
  }
  return "unknown";
}

PDType classify(const GameProtocol& protocol) {
  if (protocol.binding_contracts && !protocol.pre_play_communication) {
    throw std::invalid_argument(
        "invalid protocol: binding contracts require pre-play communication");
  }
  if (!protocol.has_arbitrator) return PDType::kType1;
  if (!protocol.pre_play_communication) return PDType::kType2;
  if (!protocol.binding_contracts) return PDType::kType3;
  return PDType::kCooperativeExcluded;
}

QuantumAdmissibility admits_quantum_extension(PDType type) {
  switch (type) {
    case PDType::kType1:
      return {false,
              "no arbitrator exists to assign payoffs, so there is nobody to "
              "run an entangle-measure-pay protocol in the first place"};
    case PDType::kType2:
      return {false,
              "the players cannot communicate and each can only apply a local "
              "unitary to their own qubit, so they cannot entangle the qubits "
              "themselves; an arbitrator who handed them an entangled state "
              "would be helping the players against their own role"};
    case PDType::kType3:
      return {true,
              "the players can communicate before moving, so they can entangle "
              "their own qubits without any help from the arbitrator"};
    case PDType::kCooperativeExcluded:
      return {false,
              "binding contracts turn the interaction into a cooperative game, "
              "which is outside the scope of this analysis"};
  }
  return {false, "unknown type"};
}

}  // namespace qgt
