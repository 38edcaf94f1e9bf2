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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/density.hpp"
#include "core/feature_map.hpp"
#include "core/sampling.hpp"

namespace gateprune {

/// Per-gate significance record. The index combines fidelity of the local
/// state change, normalized entanglement entropy of a fixed probe qubit, and
/// a perturbation-sensitivity penalty:
///
///   gsi = (fidelity + entanglement + (1 - sensitivity)) / 3
///
/// All four values live in [0,1]; sensitivity is 0 for gates without a
/// parameter and at most ~0.47 by the three-point construction.
struct GateMetrics {
  std::string gate;
  int position = 0;
  double fidelity = 0.0;
  double entanglement = 0.0;
  double sensitivity = 0.0;
  double gsi = 0.0;
};

struct SensitivityConfig {
  /// Perturbation half-width (radians) for the {0, +delta, -delta} probes.
  double delta = 0.1;

  void validate() const;
};

/// Configuration for the measurement-only estimator.
struct HardwareEstimatorConfig {
  std::uint64_t shots = 4096;
  /// Probe qubit for the entanglement proxy; -1 selects qubit 1 when the
  /// register has more than one qubit, else 0.
  int tomo_qubit = -1;
  double delta = 0.1;
  std::optional<NoiseSpec> noise;
  std::uint64_t seed = 0;
};

/// Exact engine. Walks the bound circuit once; for gate i it takes the
/// reduced state on the gate's support before the gate (fidelity and
/// sensitivity) and the probe qubit's reduced state after the gate
/// (entanglement). ent_qubit = -1 selects the default probe (qubit 1 when
/// available); out-of-range values are clamped to n-1.
std::vector<GateMetrics> gsi_exact(const BoundCircuit& circuit,
                                   int ent_qubit = -1,
                                   const SensitivityConfig& sens = {});

/// Population standard deviation of |Tr(rho_prev U(theta)^dag U(theta+d))|^2
/// over d in {0, +delta, -delta}. The gate must carry a parameter and
/// rho_prev must live on the gate's support.
double sensitivity_exact(const DensityMatrix& rho_prev, const GateOp& gate,
                         const SensitivityConfig& sens = {});

/// Measurement-only engine. For gate i it samples the overlap circuit
/// U_{i-1}^dag U_i for fidelity, three prefix circuits measured in Z/X/Y on
/// the probe qubit for the tomographic entanglement proxy (0 when n = 1), and
/// two parameter-shifted overlaps for sensitivity. Deterministic for a fixed
/// config seed.
std::vector<GateMetrics> gsi_hardware(const BoundCircuit& circuit,
                                      const HardwareEstimatorConfig& cfg);

/// (min, max) GSI over the gates; the threshold scan iterates [min, max).
std::pair<double, double> gsi_range(std::span<const GateMetrics> metrics);

/// CSV with header "position,gate,F,E,P,GSI"; the format consumed by the
/// report tooling.
std::string metrics_to_csv(std::span<const GateMetrics> metrics);

}  // namespace gateprune
