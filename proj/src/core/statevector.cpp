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

#include "core/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"

namespace gateprune {

namespace {

constexpr double kNormTol = 1e-10;

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Applies an arbitrary 2x2 matrix [[a,b],[c,d]] to the target qubit.
void apply_single(std::vector<cplx>& amps, int num_qubits, int qubit, cplx a,
                  cplx b, cplx c, cplx d) {
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = amps[i];
      const cplx a1 = amps[i + stride];
      amps[i] = a * a0 + b * a1;
      amps[i + stride] = c * a0 + d * a1;
    }
  }
  (void)num_qubits;
}

// Diagonal phase on the |1> component of the target qubit.
void apply_phase(std::vector<cplx>& amps, int qubit, cplx phase) {
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t dim = amps.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) amps[i] *= phase;
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits <= 0 || num_qubits > 30) {
    throw std::invalid_argument("statevector supports 1..30 qubits, got " +
                                std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
  amps_[0] = cplx{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  if (!is_power_of_two(amplitudes.size())) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
  StateVector sv;
  sv.amps_ = std::move(amplitudes);
  sv.num_qubits_ = 0;
  for (std::size_t d = sv.amps_.size(); d > 1; d >>= 1) ++sv.num_qubits_;
  double n2 = sv.norm_sq();
  if (std::abs(n2 - 1.0) > kNormTol) {
    throw std::invalid_argument("statevector squared norm " +
                                std::to_string(n2) + " is not 1");
  }
  return sv;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return s;
}

Eigen::MatrixXcd gate_unitary(const GateOp& gate) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const cplx i{0.0, 1.0};
  switch (gate.kind) {
    case GateKind::H: {
      Eigen::MatrixXcd u(2, 2);
      u << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      return u;
    }
    case GateKind::X: {
      Eigen::MatrixXcd u(2, 2);
      u << 0, 1, 1, 0;
      return u;
    }
    case GateKind::P: {
      Eigen::MatrixXcd u(2, 2);
      u << 1, 0, 0, std::exp(i * gate.theta);
      return u;
    }
    case GateKind::RZ: {
      Eigen::MatrixXcd u(2, 2);
      u << std::exp(-i * (gate.theta / 2.0)), 0, 0,
          std::exp(i * (gate.theta / 2.0));
      return u;
    }
    case GateKind::RX: {
      const double c = std::cos(gate.theta / 2.0);
      const cplx s = -i * std::sin(gate.theta / 2.0);
      Eigen::MatrixXcd u(2, 2);
      u << c, s, s, c;
      return u;
    }
    case GateKind::CNOT: {
      // Basis index = control_bit + 2*target_bit; flips the target when the
      // control is 1.
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
      u(0, 0) = 1;  // |c=0,t=0>
      u(2, 2) = 1;  // |c=0,t=1>
      u(3, 1) = 1;  // |c=1,t=0> -> |c=1,t=1>
      u(1, 3) = 1;
      return u;
    }
  }
  throw InternalError("unhandled gate kind");
}

void apply_gate_inplace(std::vector<cplx>& amps, int num_qubits,
                        const GateOp& gate) {
  validate_gate(gate, num_qubits);
  const cplx i{0.0, 1.0};
  switch (gate.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      apply_single(amps, num_qubits, gate.qubits[0], s, s, s, -s);
      return;
    }
    case GateKind::X:
      apply_pauli_inplace(amps, num_qubits, gate.qubits[0], 1);
      return;
    case GateKind::P:
      apply_phase(amps, gate.qubits[0], std::exp(i * gate.theta));
      return;
    case GateKind::RZ: {
      // Global-phase-split diagonal; kept exact so dagger inversion holds to
      // machine precision.
      const cplx e0 = std::exp(-i * (gate.theta / 2.0));
      const cplx e1 = std::exp(i * (gate.theta / 2.0));
      const std::size_t mask = std::size_t{1} << gate.qubits[0];
      for (std::size_t k = 0; k < amps.size(); ++k) {
        amps[k] *= (k & mask) ? e1 : e0;
      }
      return;
    }
    case GateKind::RX: {
      const cplx c{std::cos(gate.theta / 2.0), 0.0};
      const cplx s = -i * std::sin(gate.theta / 2.0);
      apply_single(amps, num_qubits, gate.qubits[0], c, s, s, c);
      return;
    }
    case GateKind::CNOT: {
      const std::size_t cmask = std::size_t{1} << gate.qubits[0];
      const std::size_t tmask = std::size_t{1} << gate.qubits[1];
      for (std::size_t k = 0; k < amps.size(); ++k) {
        if ((k & cmask) && !(k & tmask)) {
          std::swap(amps[k], amps[k | tmask]);
        }
      }
      return;
    }
  }
  throw InternalError("unhandled gate kind");
}

void apply_pauli_inplace(std::vector<cplx>& amps, int num_qubits, int qubit,
                         int pauli) {
  const std::size_t mask = std::size_t{1} << qubit;
  const cplx i{0.0, 1.0};
  switch (pauli) {
    case 1:  // X
      for (std::size_t k = 0; k < amps.size(); ++k) {
        if (!(k & mask)) std::swap(amps[k], amps[k | mask]);
      }
      return;
    case 2:  // Y
      for (std::size_t k = 0; k < amps.size(); ++k) {
        if (!(k & mask)) {
          const cplx a0 = amps[k];
          const cplx a1 = amps[k | mask];
          amps[k] = -i * a1;
          amps[k | mask] = i * a0;
        }
      }
      return;
    case 3:  // Z
      for (std::size_t k = 0; k < amps.size(); ++k) {
        if (k & mask) amps[k] = -amps[k];
      }
      return;
    default:
      throw std::invalid_argument("pauli index must be 1 (X), 2 (Y) or 3 (Z)");
  }
  (void)num_qubits;
}

StateVector apply_gate(const StateVector& state, const GateOp& gate) {
  StateVector out = state;
  apply_gate_inplace(out.mutable_amplitudes(), out.num_qubits(), gate);
  return out;
}

StateVector run_statevector(const Circuit& circuit, const StateVector* init) {
  StateVector state = init ? *init : StateVector(circuit.num_qubits);
  if (state.num_qubits() != circuit.num_qubits) {
    throw std::invalid_argument("initial state width does not match circuit");
  }
  for (const GateOp& gate : circuit.gates) {
    apply_gate_inplace(state.mutable_amplitudes(), state.num_qubits(), gate);
  }
  return state;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner product of states of unequal dimension");
  }
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < a.dim(); ++k) {
    acc += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
  }
  return acc;
}

}  // namespace gateprune
