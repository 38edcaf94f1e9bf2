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

#include "core/density.hpp"

#include <cmath>
#include <stdexcept>

namespace gateprune {

namespace {
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenFloor = -1e-9;
}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if ((m_.rows() & (m_.rows() - 1)) != 0) {
    throw std::invalid_argument("density matrix dimension must be 2^d");
  }
  const double herm_err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian (max dev " +
                                std::to_string(herm_err) + ")");
  }
  const double trace_err = std::abs(m_.trace() - cplx{1.0, 0.0});
  if (trace_err > kTraceTol) {
    throw std::invalid_argument("density matrix trace deviates from 1 by " +
                                std::to_string(trace_err));
  }
}

int DensityMatrix::num_qubits() const {
  int n = 0;
  for (Eigen::Index d = dim(); d > 1; d >>= 1) ++n;
  return n;
}

DensityMatrix partial_trace(const StateVector& state,
                            std::span<const int> keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial trace needs a nonempty keep set");
  }
  const int n = state.num_qubits();
  std::vector<bool> kept(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("keep qubit " + std::to_string(q) +
                                  " out of range");
    }
    if (kept[q]) {
      throw std::invalid_argument("keep set repeats qubit " + std::to_string(q));
    }
    kept[q] = true;
  }

  const int k = static_cast<int>(keep.size());
  const std::size_t dim_a = std::size_t{1} << k;
  std::vector<int> traced;
  traced.reserve(n - k);
  for (int q = 0; q < n; ++q) {
    if (!kept[q]) traced.push_back(q);
  }
  const std::size_t dim_b = std::size_t{1} << traced.size();

  auto scatter = [](std::size_t bits, std::span<const int> positions) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (bits & (std::size_t{1} << j)) out |= std::size_t{1} << positions[j];
    }
    return out;
  };

  // rho[a, a'] = sum_b psi[a,b] conj(psi[a',b]); O(4^k 2^(n-k)).
  std::vector<std::size_t> a_index(dim_a);
  for (std::size_t a = 0; a < dim_a; ++a) a_index[a] = scatter(a, keep);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_a, dim_a);
  const auto& amps = state.amplitudes();
  for (std::size_t b = 0; b < dim_b; ++b) {
    const std::size_t b_bits = scatter(b, traced);
    for (std::size_t a = 0; a < dim_a; ++a) {
      const cplx va = amps[a_index[a] | b_bits];
      if (va == cplx{0.0, 0.0}) continue;
      for (std::size_t a2 = 0; a2 < dim_a; ++a2) {
        rho(a, a2) += va * std::conj(amps[a_index[a2] | b_bits]);
      }
    }
  }
  // Symmetrize away the last ulps so the constructor's Hermiticity check
  // reflects genuine defects only.
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    double lambda = solver.eigenvalues()[i];
    if (lambda < kEigenFloor) {
      throw std::invalid_argument("density matrix eigenvalue " +
                                  std::to_string(lambda) +
                                  " below tolerance floor");
    }
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace gateprune
