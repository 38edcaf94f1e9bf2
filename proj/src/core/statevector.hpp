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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "core/circuit.hpp"

namespace gateprune {

using cplx = std::complex<double>;

/// Dense amplitude vector over 2^n basis states.
///
/// Qubit ordering is little-endian throughout the project: qubit 0 is the
/// least significant bit of the basis index. Bitstrings rendered for counts
/// put the most significant (highest-index) qubit first.
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int num_qubits);

  /// Adopts an amplitude vector; length must be a power of two and the
  /// squared norm must be 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  double norm_sq() const;

  /// Amplitudes are mutated in place by the kernels below; the public
  /// operations in this header stay value-semantic.
  std::vector<cplx>& mutable_amplitudes() { return amps_; }

 private:
  StateVector() = default;
  int num_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// 2x2 (single-qubit) or 4x4 (CNOT) unitary for a gate. Two-qubit matrices
/// order the support as (control = bit 0, target = bit 1), matching
/// reduced_density_matrix called with (control, target).
Eigen::MatrixXcd gate_unitary(const GateOp& gate);

/// U|psi>; norm preserved. Throws std::invalid_argument on a gate that does
/// not fit the register.
StateVector apply_gate(const StateVector& state, const GateOp& gate);

/// Sequential application of all gates, starting from |0...0> when init is
/// null.
StateVector run_statevector(const Circuit& circuit,
                            const StateVector* init = nullptr);

// In-place kernels shared by the simulator paths.
void apply_gate_inplace(std::vector<cplx>& amps, int num_qubits,
                        const GateOp& gate);
void apply_pauli_inplace(std::vector<cplx>& amps, int num_qubits, int qubit,
                         int pauli /* 1=X, 2=Y, 3=Z */);

cplx inner_product(const StateVector& a, const StateVector& b);

}  // namespace gateprune
