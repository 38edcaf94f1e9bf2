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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "core/circuit.hpp"
#include "core/statevector.hpp"

namespace gateprune {

/// Parametric noise: depolarizing error probability after every single-qubit
/// (p1) and two-qubit (p2) gate, realized as stochastic Pauli insertion per
/// shot, plus an independent readout bit-flip probability p_ro per measured
/// bit.
struct NoiseSpec {
  double p1 = 0.0;
  double p2 = 0.0;
  double p_ro = 0.0;

  bool gate_noise() const { return p1 > 0.0 || p2 > 0.0; }
  bool any() const { return gate_noise() || p_ro > 0.0; }
  void validate() const;
};

/// Shot histogram. Keys are bitstrings over the measured qubits rendered
/// most-significant-qubit first (highest qubit index leftmost).
struct MeasurementCounts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  std::uint64_t count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }
  double frequency(const std::string& key) const {
    return shots == 0 ? 0.0 : static_cast<double>(count(key)) / shots;
  }
};

/// Draws `shots` i.i.d. computational-basis outcomes over all qubits.
/// Deterministic for a fixed seed.
MeasurementCounts sample_counts(const Circuit& circuit, std::uint64_t shots,
                                const std::optional<NoiseSpec>& noise,
                                std::uint64_t seed);

/// Same, measuring only the listed qubits (keys cover just those bits).
MeasurementCounts sample_counts_subset(const Circuit& circuit,
                                       std::span<const int> measured,
                                       std::uint64_t shots,
                                       const std::optional<NoiseSpec>& noise,
                                       std::uint64_t seed);

enum class PauliBasis { X, Y, Z };

/// <P_q> of the circuit's output state. Exact mode (shots absent) reads the
/// statevector; sampled mode appends the basis rotation (X: H; Y: S-dagger
/// then H; Z: none), measures the qubit, and returns (N0 - N1)/shots.
double pauli_expectation(const Circuit& circuit, int qubit, PauliBasis basis,
                         std::optional<std::uint64_t> shots = std::nullopt,
                         const std::optional<NoiseSpec>& noise = std::nullopt,
                         std::uint64_t seed = 0);

}  // namespace gateprune
