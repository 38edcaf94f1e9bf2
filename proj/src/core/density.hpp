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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "core/statevector.hpp"

namespace gateprune {

/// Hermitian, unit-trace matrix over a 2^d-dimensional subsystem. Hermiticity
/// and trace are checked on construction (1e-10); positivity is checked where
/// eigenvalues are actually taken (entropy), tolerating -1e-9 of numerical
/// negativity.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int num_qubits() const;

 private:
  Eigen::MatrixXcd m_;
};

/// Tr_B(|psi><psi|) over the kept qubits. `keep` is an ordered list: keep[0]
/// becomes the least significant bit of the reduced index, mirroring the
/// global little-endian convention. Throws on an empty or out-of-range set.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);

/// S(rho) = -sum lambda log2 lambda in bits, with 0 log 0 := 0. Eigenvalues in
/// [-1e-9, 0) are clamped to 0; anything more negative (or a non-Hermitian
/// input) throws.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace gateprune
