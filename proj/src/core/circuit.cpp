// Copyright 2026 The gateprune authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace gateprune {

std::string GateOp::name() const {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::P: return "p";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

GateOp GateOp::inverse() const {
  GateOp g = *this;
  if (g.parameterized()) g.theta = -g.theta;
  return g;
}

void validate_gate(const GateOp& gate, int num_qubits) {
  for (int i = 0; i < gate.arity(); ++i) {
    if (gate.qubits[i] < 0 || gate.qubits[i] >= num_qubits) {
      throw std::invalid_argument("gate '" + gate.name() + "' touches qubit " +
                                  std::to_string(gate.qubits[i]) +
                                  " outside a " + std::to_string(num_qubits) +
                                  "-qubit register");
    }
  }
  if (gate.kind == GateKind::CNOT && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("cx control and target must differ");
  }
}

Circuit::Circuit(int n, std::vector<GateOp> g) : num_qubits(n), gates(std::move(g)) {
  if (n <= 0) throw std::invalid_argument("circuit needs at least one qubit");
  for (const auto& gate : gates) validate_gate(gate, num_qubits);
}

void Circuit::append(const GateOp& gate) {
  validate_gate(gate, num_qubits);
  gates.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits > num_qubits) {
    throw std::invalid_argument("appended circuit is wider than the register");
  }
  for (const auto& gate : other.gates) gates.push_back(gate);
}

Circuit dagger(const Circuit& circuit) {
  Circuit out(circuit.num_qubits);
  out.gates.reserve(circuit.size());
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    out.gates.push_back(it->inverse());
  }
  return out;
}

}  // namespace gateprune
