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

#include "core/feature_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gateprune {

void FeatureMapSpec::validate() const {
  if (num_features < 1) {
    throw std::invalid_argument("feature map needs at least one feature");
  }
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  // A single qubit simply has no entangler pairs; still a valid map.
}

std::vector<std::pair<int, int>> entangler_pairs(int n, Entanglement pattern) {
  std::vector<std::pair<int, int>> pairs;
  if (pattern == Entanglement::Linear) {
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::size_t expected_gate_count(const FeatureMapSpec& spec) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(spec.num_features);
  const std::size_t pairs =
      spec.entanglement == Entanglement::Linear ? (n >= 1 ? n - 1 : 0)
                                                : n * (n - 1) / 2;
  return static_cast<std::size_t>(spec.reps) * (2 * n + 3 * pairs);
}

BoundCircuit build_zz_map(const FeatureMapSpec& spec, std::span<const double> x) {
  spec.validate();
  const int n = spec.num_features;
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("feature vector has " +
                                std::to_string(x.size()) + " entries, map has " +
                                std::to_string(n) + " qubits");
  }
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument(
          "features must be normalized to [0,1] before binding");
    }
  }

  constexpr double pi = std::numbers::pi;
  const auto pairs = entangler_pairs(n, spec.entanglement);

  BoundCircuit out;
  out.circuit = Circuit(n);
  out.features.assign(x.begin(), x.end());

  auto push = [&out](const GateOp& gate, int layer, GateRole role) {
    out.circuit.append(gate);
    out.provenance.push_back({layer, role});
  };

  for (int rep = 0; rep < spec.reps; ++rep) {
    for (int q = 0; q < n; ++q) push(GateOp::h(q), rep, GateRole::Hadamard);
    for (int q = 0; q < n; ++q) {
      push(GateOp::p(q, 2.0 * pi * x[q]), rep, GateRole::SinglePhase);
    }
    for (const auto& [i, j] : pairs) {
      const double angle = 2.0 * (pi - pi * x[i]) * (pi - pi * x[j]);
      push(GateOp::cnot(i, j), rep, GateRole::EntanglerCx);
      push(GateOp::p(j, angle), rep, GateRole::EntanglerPhase);
      push(GateOp::cnot(i, j), rep, GateRole::EntanglerCx);
    }
  }

  if (out.size() != expected_gate_count(spec)) {
    throw std::logic_error("feature map gate census mismatch");
  }
  return out;
}

BoundCircuit prune(const BoundCircuit& circuit, const KeepMask& mask) {
  if (mask.size() != circuit.size()) {
    throw std::invalid_argument("keep mask length " +
                                std::to_string(mask.size()) +
                                " does not match gate count " +
                                std::to_string(circuit.size()));
  }
  BoundCircuit out;
  out.circuit = Circuit(circuit.circuit.num_qubits);
  out.features = circuit.features;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    out.circuit.gates.push_back(circuit.circuit.gates[i]);
    out.provenance.push_back(circuit.provenance[i]);
  }
  return out;
}

std::set<int> active_qubits(const Circuit& circuit) {
  std::set<int> active;
  for (const GateOp& gate : circuit.gates) {
    for (int i = 0; i < gate.arity(); ++i) active.insert(gate.qubits[i]);
  }
  return active;
}

}  // namespace gateprune
