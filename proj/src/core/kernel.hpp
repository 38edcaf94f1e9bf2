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
#include <vector>

#include "core/dataset.hpp"
#include "core/feature_map.hpp"
#include "core/timer.hpp"

namespace gateprune {

/// Rebuilds the (optionally pruned) feature map for any data point. Gate
/// positions are stable under binding, so a keep mask computed on one bound
/// instance applies to every other.
struct CircuitBuilder {
  FeatureMapSpec spec;
  std::optional<KeepMask> mask;

  Circuit operator()(std::span<const double> x) const;
  std::size_t gate_count() const;
};

/// Kernel values in [0,1]; rows index the left (training) set.
struct KernelMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

struct ShotKernel {
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;
};

/// Fidelity kernel entry. Exact mode computes |<psi(x1)|psi(x2)>|^2 from the
/// statevectors; shot mode samples the all-zero frequency of the overlap
/// circuit Phi(x1)^dag Phi(x2).
double kernel_entry(const CircuitBuilder& builder, std::span<const double> x1,
                    std::span<const double> x2,
                    const std::optional<ShotKernel>& shots = std::nullopt);

/// Square Gram matrix over the rows of `data` (exact mode; states are
/// simulated once per row). Symmetric with unit diagonal.
KernelMatrix kernel_matrix_square(const CircuitBuilder& builder,
                                  const DataMatrix& data,
                                  Stopwatch* watch = nullptr,
                                  unsigned threads = 1);

/// Rectangular rows(left) x rows(right) kernel matrix.
KernelMatrix kernel_matrix_cross(const CircuitBuilder& builder,
                                 const DataMatrix& left,
                                 const DataMatrix& right,
                                 Stopwatch* watch = nullptr,
                                 unsigned threads = 1);

}  // namespace gateprune
