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

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "core/circuit.hpp"

namespace gateprune {

enum class Entanglement { Linear, Full };

/// Shape of a ZZ feature map: one qubit per feature, H + phase layer and
/// CX-phase-CX entangler blocks per pair, repeated `reps` times.
struct FeatureMapSpec {
  int num_features = 0;
  Entanglement entanglement = Entanglement::Linear;
  int reps = 1;

  void validate() const;
};

enum class GateRole { Hadamard, SinglePhase, EntanglerCx, EntanglerPhase };

struct GateProvenance {
  int layer = 0;  // repetition index
  GateRole role = GateRole::Hadamard;
};

/// A feature map bound to a concrete feature vector, with per-gate
/// provenance that survives pruning.
struct BoundCircuit {
  Circuit circuit;
  std::vector<double> features;
  std::vector<GateProvenance> provenance;

  std::size_t size() const { return circuit.size(); }
};

/// Boolean vector over gate positions; true = gate survives the prune.
using KeepMask = std::vector<bool>;

/// Entangled pairs in pattern order: linear walks neighbours
/// (0,1),(1,2),...; full is lexicographic over i<j.
std::vector<std::pair<int, int>> entangler_pairs(int n, Entanglement pattern);

/// reps * (2n + 3*pairs); the size every build must produce.
std::size_t expected_gate_count(const FeatureMapSpec& spec);

/// Builds the bound ZZ map for x in [0,1]^n. Per repetition: H on every
/// qubit, P(2*pi*x_i) on qubit i, then per pair (i,j): CX(i->j),
/// P(2*(pi - pi*x_i)*(pi - pi*x_j)) on j, CX(i->j). Features outside [0,1]
/// are rejected; normalization is the ingestion layer's job.
BoundCircuit build_zz_map(const FeatureMapSpec& spec, std::span<const double> x);

/// New circuit containing exactly the kept gates in original order, same
/// register width, provenance preserved. Qubits are never renumbered.
BoundCircuit prune(const BoundCircuit& circuit, const KeepMask& mask);

/// Qubits touched by at least one gate.
std::set<int> active_qubits(const Circuit& circuit);

}  // namespace gateprune
