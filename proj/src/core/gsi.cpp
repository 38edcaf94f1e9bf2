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

#include "core/gsi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace gateprune {

namespace {

double population_std3(double a, double b, double c) {
  const double mean = (a + b + c) / 3.0;
  const double var =
      ((a - mean) * (a - mean) + (b - mean) * (b - mean) +
       (c - mean) * (c - mean)) /
      3.0;
  return std::sqrt(var);
}

double combine(double f, double e, double p) {
  return (f + e + (1.0 - p)) / 3.0;
}

int default_probe(int num_qubits) { return num_qubits > 1 ? 1 : 0; }

std::span<const int> support_of(const GateOp& gate) {
  return {gate.qubits.data(), static_cast<std::size_t>(gate.arity())};
}

double overlap_fidelity(const DensityMatrix& rho, const Eigen::MatrixXcd& u) {
  const cplx t = (rho.matrix() * u).trace();
  return std::norm(t);
}

// --- hardware estimator helpers -------------------------------------------

// Prefix circuit of the first `len` gates.
Circuit prefix(const Circuit& circuit, std::size_t len) {
  Circuit out(circuit.num_qubits);
  out.gates.assign(circuit.gates.begin(), circuit.gates.begin() + len);
  return out;
}

// Overlap circuit for p(0...0 | right then dagger(left)); the all-zero
// frequency estimates |<left|right>|^2.
Circuit overlap_circuit(const Circuit& right, const Circuit& left) {
  Circuit out = right;
  out.append(dagger(left));
  return out;
}

double all_zero_probability(const Circuit& circuit, std::uint64_t shots,
                            const std::optional<NoiseSpec>& noise,
                            std::uint64_t seed) {
  const MeasurementCounts counts = sample_counts(circuit, shots, noise, seed);
  return counts.frequency(std::string(circuit.num_qubits, '0'));
}

}  // namespace

void SensitivityConfig::validate() const {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
}

double sensitivity_exact(const DensityMatrix& rho_prev, const GateOp& gate,
                         const SensitivityConfig& sens) {
  sens.validate();
  if (!gate.parameterized()) {
    throw std::invalid_argument("sensitivity is defined for parameterized gates");
  }
  const Eigen::MatrixXcd base = gate_unitary(gate);
  if (rho_prev.dim() != base.rows()) {
    throw std::invalid_argument("rho_prev dimension does not match gate support");
  }
  const double deltas[3] = {0.0, sens.delta, -sens.delta};
  double fids[3];
  for (int k = 0; k < 3; ++k) {
    GateOp shifted = gate;
    shifted.theta += deltas[k];
    const Eigen::MatrixXcd v = base.adjoint() * gate_unitary(shifted);
    fids[k] = overlap_fidelity(rho_prev, v);
  }
  return population_std3(fids[0], fids[1], fids[2]);
}

std::vector<GateMetrics> gsi_exact(const BoundCircuit& circuit,
                                   int ent_qubit,
                                   const SensitivityConfig& sens) {
  sens.validate();
  const Circuit& qc = circuit.circuit;
  if (qc.gates.empty()) {
    throw std::invalid_argument("cannot score an empty circuit");
  }
  if (ent_qubit < 0) ent_qubit = default_probe(qc.num_qubits);
  ent_qubit = std::min(ent_qubit, qc.num_qubits - 1);

  StateVector state(qc.num_qubits);
  const int probe[] = {ent_qubit};

  std::vector<GateMetrics> metrics;
  metrics.reserve(qc.size());
  for (std::size_t i = 0; i < qc.size(); ++i) {
    const GateOp& gate = qc.gates[i];
    const DensityMatrix rho_prev = partial_trace(state, support_of(gate));

    GateMetrics m;
    m.gate = gate.name();
    m.position = static_cast<int>(i);
    m.fidelity = overlap_fidelity(rho_prev, gate_unitary(gate));
    // |Tr(rho U)|^2 <= 1 exactly; shave accumulated rounding.
    m.fidelity = std::clamp(m.fidelity, 0.0, 1.0);

    apply_gate_inplace(state.mutable_amplitudes(), qc.num_qubits, gate);

    const DensityMatrix rho_ent = partial_trace(state, probe);
    const double dim_log = std::log2(static_cast<double>(rho_ent.dim()));
    m.entanglement =
        std::clamp(von_neumann_entropy(rho_ent) / dim_log, 0.0, 1.0);

    m.sensitivity =
        gate.parameterized() ? sensitivity_exact(rho_prev, gate, sens) : 0.0;
    m.gsi = combine(m.fidelity, m.entanglement, m.sensitivity);
    metrics.push_back(std::move(m));
  }
  return metrics;
}

std::vector<GateMetrics> gsi_hardware(const BoundCircuit& circuit,
                                      const HardwareEstimatorConfig& cfg) {
  const Circuit& qc = circuit.circuit;
  if (qc.gates.empty()) {
    throw std::invalid_argument("cannot score an empty circuit");
  }
  if (cfg.shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (!(cfg.delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  const int n = qc.num_qubits;
  int q = cfg.tomo_qubit < 0 ? default_probe(n) : cfg.tomo_qubit;
  if (q >= n) throw std::invalid_argument("tomography qubit out of range");

  // Every sampled circuit gets its own child seed, in a fixed order, so the
  // whole estimate is a pure function of (circuit, cfg).
  std::uint64_t stream = 0;
  auto next_seed = [&cfg, &stream]() {
    return derive_seed(cfg.seed, 0xe57u, stream++);
  };

  std::vector<GateMetrics> metrics;
  metrics.reserve(qc.size());
  for (std::size_t i = 0; i < qc.size(); ++i) {
    const GateOp& gate = qc.gates[i];
    const Circuit cur = prefix(qc, i + 1);
    const Circuit prev = prefix(qc, i);

    GateMetrics m;
    m.gate = gate.name();
    m.position = static_cast<int>(i);

    m.fidelity = all_zero_probability(overlap_circuit(cur, prev), cfg.shots,
                                      cfg.noise, next_seed());

    if (n > 1) {
      // Single-qubit tomography of the probe: Bloch components from the
      // Z/X/Y settings, clipped to the Bloch ball, then the entropy of the
      // reconstructed state.
      const double z = pauli_expectation(cur, q, PauliBasis::Z, cfg.shots,
                                         cfg.noise, next_seed());
      const double x = pauli_expectation(cur, q, PauliBasis::X, cfg.shots,
                                         cfg.noise, next_seed());
      const double y = pauli_expectation(cur, q, PauliBasis::Y, cfg.shots,
                                         cfg.noise, next_seed());
      double r = std::sqrt(x * x + y * y + z * z);
      double sx = x, sy = y, sz = z;
      if (r > 1.0) {
        sx /= r;
        sy /= r;
        sz /= r;
      }
      Eigen::MatrixXcd rho(2, 2);
      rho << cplx{(1.0 + sz) / 2.0, 0.0}, cplx{sx / 2.0, -sy / 2.0},
          cplx{sx / 2.0, sy / 2.0}, cplx{(1.0 - sz) / 2.0, 0.0};
      m.entanglement =
          std::clamp(von_neumann_entropy(DensityMatrix(rho)), 0.0, 1.0);
    } else {
      m.entanglement = 0.0;
    }

    if (gate.parameterized()) {
      double fplus = 0.0, fminus = 0.0;
      for (int sign = 0; sign < 2; ++sign) {
        Circuit shifted = cur;
        shifted.gates.back().theta += sign == 0 ? cfg.delta : -cfg.delta;
        const double f = all_zero_probability(overlap_circuit(shifted, cur),
                                              cfg.shots, cfg.noise,
                                              next_seed());
        (sign == 0 ? fplus : fminus) = f;
      }
      m.sensitivity = population_std3(1.0, fplus, fminus);
    } else {
      m.sensitivity = 0.0;
    }

    m.gsi = combine(m.fidelity, m.entanglement, m.sensitivity);
    metrics.push_back(std::move(m));
  }
  return metrics;
}

std::pair<double, double> gsi_range(std::span<const GateMetrics> metrics) {
  if (metrics.empty()) {
    throw std::invalid_argument("gsi_range of an empty metrics list");
  }
  double lo = metrics[0].gsi, hi = metrics[0].gsi;
  for (const GateMetrics& m : metrics) {
    lo = std::min(lo, m.gsi);
    hi = std::max(hi, m.gsi);
  }
  return {lo, hi};
}

std::string metrics_to_csv(std::span<const GateMetrics> metrics) {
  std::string out = "position,gate,F,E,P,GSI\n";
  char buf[160];
  for (const GateMetrics& m : metrics) {
    std::snprintf(buf, sizeof(buf), "%d,%s,%.17g,%.17g,%.17g,%.17g\n",
                  m.position, m.gate.c_str(), m.fidelity, m.entanglement,
                  m.sensitivity, m.gsi);
    out += buf;
  }
  return out;
}

}  // namespace gateprune
