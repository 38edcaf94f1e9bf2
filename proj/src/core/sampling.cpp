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

#include "core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/rng.hpp"

namespace gateprune {

namespace {

void check_probability(double p, const char* name) {
  if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
  }
}

std::string outcome_key(std::size_t bits, std::span<const int> measured) {
  // Highest-index measured qubit first.
  std::string key(measured.size(), '0');
  for (std::size_t j = 0; j < measured.size(); ++j) {
    if (bits & (std::size_t{1} << j)) key[measured.size() - 1 - j] = '1';
  }
  return key;
}

// Marginal probabilities over the measured qubits; measured[0] is the least
// significant bit of the outcome index.
std::vector<double> subset_probabilities(const std::vector<cplx>& amps,
                                         std::span<const int> measured) {
  std::vector<double> probs(std::size_t{1} << measured.size(), 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::size_t outcome = 0;
    for (std::size_t j = 0; j < measured.size(); ++j) {
      if (i & (std::size_t{1} << measured[j])) outcome |= std::size_t{1} << j;
    }
    probs[outcome] += p;
  }
  return probs;
}

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;  // guard against rounding shortfall
  return cdf;
}

std::size_t draw_outcome(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform();
  return std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
}

// Inserts a uniformly random non-identity Pauli on the gate's support.
void insert_pauli_error(std::vector<cplx>& amps, int num_qubits,
                        const GateOp& gate, Rng& rng) {
  if (gate.arity() == 1) {
    const int pauli = 1 + static_cast<int>(rng.uniform_index(3));
    apply_pauli_inplace(amps, num_qubits, gate.qubits[0], pauli);
  } else {
    // One of the 15 non-identity two-qubit Paulis, uniformly.
    const std::size_t idx = 1 + rng.uniform_index(15);
    const int p0 = static_cast<int>(idx & 3);
    const int p1 = static_cast<int>(idx >> 2);
    if (p0) apply_pauli_inplace(amps, num_qubits, gate.qubits[0], p0);
    if (p1) apply_pauli_inplace(amps, num_qubits, gate.qubits[1], p1);
  }
}

}  // namespace

void NoiseSpec::validate() const {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  check_probability(p_ro, "p_ro");
}

MeasurementCounts sample_counts_subset(const Circuit& circuit,
                                       std::span<const int> measured,
                                       std::uint64_t shots,
                                       const std::optional<NoiseSpec>& noise,
                                       std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (measured.empty()) {
    throw std::invalid_argument("at least one qubit must be measured");
  }
  for (int q : measured) {
    if (q < 0 || q >= circuit.num_qubits) {
      throw std::invalid_argument("measured qubit out of range");
    }
  }
  if (noise) noise->validate();

  Rng rng(derive_seed(seed, 0x5a4d50u));
  const bool gate_noise = noise && noise->gate_noise();
  const double p_ro = noise ? noise->p_ro : 0.0;

  const StateVector clean = run_statevector(circuit);
  const std::vector<double> clean_cdf =
      cumulative(subset_probabilities(clean.amplitudes(), measured));

  std::vector<std::uint64_t> tallies(std::size_t{1} << measured.size(), 0);
  std::vector<cplx> scratch;
  std::vector<char> error_at(circuit.size(), 0);

  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    std::size_t outcome;
    bool any_error = false;
    if (gate_noise) {
      for (std::size_t g = 0; g < circuit.size(); ++g) {
        const double p =
            circuit.gates[g].arity() == 1 ? noise->p1 : noise->p2;
        error_at[g] = (p > 0.0 && rng.bernoulli(p)) ? 1 : 0;
        any_error |= error_at[g] != 0;
      }
    }
    if (!any_error) {
      outcome = draw_outcome(clean_cdf, rng);
    } else {
      // Re-run this shot with the sampled Pauli faults inserted.
      scratch.assign(clean.dim(), cplx{0.0, 0.0});
      scratch[0] = cplx{1.0, 0.0};
      for (std::size_t g = 0; g < circuit.size(); ++g) {
        apply_gate_inplace(scratch, circuit.num_qubits, circuit.gates[g]);
        if (error_at[g]) {
          insert_pauli_error(scratch, circuit.num_qubits, circuit.gates[g],
                             rng);
        }
      }
      const auto cdf = cumulative(subset_probabilities(scratch, measured));
      outcome = draw_outcome(cdf, rng);
    }
    if (p_ro > 0.0) {
      for (std::size_t j = 0; j < measured.size(); ++j) {
        if (rng.bernoulli(p_ro)) outcome ^= std::size_t{1} << j;
      }
    }
    ++tallies[outcome];
  }

  MeasurementCounts out;
  out.shots = shots;
  for (std::size_t o = 0; o < tallies.size(); ++o) {
    if (tallies[o] > 0) out.counts[outcome_key(o, measured)] = tallies[o];
  }
  return out;
}

MeasurementCounts sample_counts(const Circuit& circuit, std::uint64_t shots,
                                const std::optional<NoiseSpec>& noise,
                                std::uint64_t seed) {
  std::vector<int> all(circuit.num_qubits);
  for (int q = 0; q < circuit.num_qubits; ++q) all[q] = q;
  return sample_counts_subset(circuit, all, shots, noise, seed);
}

double pauli_expectation(const Circuit& circuit, int qubit, PauliBasis basis,
                         std::optional<std::uint64_t> shots,
                         const std::optional<NoiseSpec>& noise,
                         std::uint64_t seed) {
  if (qubit < 0 || qubit >= circuit.num_qubits) {
    throw std::invalid_argument("qubit out of range");
  }

  if (!shots) {
    const StateVector state = run_statevector(circuit);
    const auto& amps = state.amplitudes();
    std::vector<cplx> rotated = amps;
    const int pauli = basis == PauliBasis::X ? 1 : basis == PauliBasis::Y ? 2 : 3;
    apply_pauli_inplace(rotated, circuit.num_qubits, qubit, pauli);
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < amps.size(); ++k) {
      acc += std::conj(amps[k]) * rotated[k];
    }
    return acc.real();
  }

  Circuit rotated = circuit;
  switch (basis) {
    case PauliBasis::X:
      rotated.append(GateOp::h(qubit));
      break;
    case PauliBasis::Y:
      rotated.append(GateOp::p(qubit, -std::numbers::pi / 2.0));
      rotated.append(GateOp::h(qubit));
      break;
    case PauliBasis::Z:
      break;
  }
  const int q[] = {qubit};
  const MeasurementCounts counts =
      sample_counts_subset(rotated, q, *shots, noise, seed);
  const double n0 = static_cast<double>(counts.count("0"));
  const double n1 = static_cast<double>(counts.count("1"));
  return (n0 - n1) / static_cast<double>(*shots);
}

}  // namespace gateprune
