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

#pragma once

#include <array>
#include <string>
#include <vector>

namespace gateprune {

enum class GateKind { H, X, P, RZ, RX, CNOT };

/// A single gate instance. P/RZ/RX carry exactly one angle (radians);
/// H/X/CNOT carry none. For CNOT, qubit(0) is the control and qubit(1)
/// the target.
struct GateOp {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{0, -1};
  double theta = 0.0;

  static GateOp h(int q) { return {GateKind::H, {q, -1}, 0.0}; }
  static GateOp x(int q) { return {GateKind::X, {q, -1}, 0.0}; }
  static GateOp p(int q, double theta) { return {GateKind::P, {q, -1}, theta}; }
  static GateOp rz(int q, double theta) { return {GateKind::RZ, {q, -1}, theta}; }
  static GateOp rx(int q, double theta) { return {GateKind::RX, {q, -1}, theta}; }
  static GateOp cnot(int control, int target) {
    return {GateKind::CNOT, {control, target}, 0.0};
  }

  int arity() const { return kind == GateKind::CNOT ? 2 : 1; }
  bool parameterized() const {
    return kind == GateKind::P || kind == GateKind::RZ || kind == GateKind::RX;
  }
  int control() const { return qubits[0]; }
  int target() const { return kind == GateKind::CNOT ? qubits[1] : qubits[0]; }

  /// Lowercase mnemonic: "h", "x", "p", "rz", "rx", "cx".
  std::string name() const;

  /// Same gate with the angle negated; inverts P/RZ/RX. H/X/CNOT are
  /// self-inverse, so this is the gate inverse for every supported kind.
  GateOp inverse() const;

  bool operator==(const GateOp&) const = default;
};

/// Ordered gate list over a fixed register. A gate's identity is its list
/// index; pruning builds new circuits rather than renumbering in place.
struct Circuit {
  int num_qubits = 0;
  std::vector<GateOp> gates;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {}
  Circuit(int n, std::vector<GateOp> g);

  std::size_t size() const { return gates.size(); }
  void append(const GateOp& gate);
  void append(const Circuit& other);
};

/// Throws std::invalid_argument if the gate is malformed for an n-qubit
/// register (index out of range, duplicate CNOT qubits).
void validate_gate(const GateOp& gate, int num_qubits);

/// Reversed gate order with every parameter negated; run(C + dagger(C))
/// returns to |0...0>.
Circuit dagger(const Circuit& circuit);

}  // namespace gateprune
