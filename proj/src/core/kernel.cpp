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

#include "core/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/parallel.hpp"
#include "core/sampling.hpp"
#include "core/statevector.hpp"

namespace gateprune {

Circuit CircuitBuilder::operator()(std::span<const double> x) const {
  BoundCircuit bound = build_zz_map(spec, x);
  if (mask) bound = prune(bound, *mask);
  return std::move(bound.circuit);
}

std::size_t CircuitBuilder::gate_count() const {
  if (!mask) return expected_gate_count(spec);
  std::size_t kept = 0;
  for (bool b : *mask) kept += b ? 1 : 0;
  return kept;
}

double kernel_entry(const CircuitBuilder& builder, std::span<const double> x1,
                    std::span<const double> x2,
                    const std::optional<ShotKernel>& shots) {
  if (x1.size() != x2.size()) {
    throw std::invalid_argument("kernel arguments of unequal dimension");
  }
  if (!shots) {
    const StateVector s1 = run_statevector(builder(x1));
    const StateVector s2 = run_statevector(builder(x2));
    return std::clamp(std::norm(inner_product(s1, s2)), 0.0, 1.0);
  }
  // Overlap trick: p(0...0 | Phi(x2) then Phi(x1)^dag).
  Circuit overlap = builder(x2);
  overlap.append(dagger(builder(x1)));
  const MeasurementCounts counts =
      sample_counts(overlap, shots->shots, std::nullopt, shots->seed);
  return counts.frequency(std::string(overlap.num_qubits, '0'));
}

namespace {

std::vector<StateVector> simulate_rows(const CircuitBuilder& builder,
                                       const DataMatrix& data,
                                       unsigned threads) {
  std::vector<StateVector> states(data.rows, StateVector(1));
  parallel_for(data.rows, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      states[r] = run_statevector(builder(data.row(r)));
    }
  });
  return states;
}

// Deterministic per-entry cost: one circuit evaluation plus the inner
// product, in units of gates touched.
double entry_cost(const CircuitBuilder& builder) {
  return static_cast<double>(builder.gate_count()) + 1.0;
}

}  // namespace

KernelMatrix kernel_matrix_square(const CircuitBuilder& builder,
                                  const DataMatrix& data, Stopwatch* watch,
                                  unsigned threads) {
  const std::size_t m = data.rows;
  const std::vector<StateVector> states = simulate_rows(builder, data, threads);

  KernelMatrix k;
  k.rows = k.cols = m;
  k.values.assign(m * m, 0.0);
  parallel_for(m, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      k.values[i * m + i] = 1.0;
      for (std::size_t j = 0; j < i; ++j) {
        const double v =
            std::clamp(std::norm(inner_product(states[i], states[j])), 0.0, 1.0);
        k.values[i * m + j] = v;
        k.values[j * m + i] = v;
      }
    }
  });
  if (watch) watch->charge(entry_cost(builder) * (m * (m + 1)) / 2.0);
  return k;
}

KernelMatrix kernel_matrix_cross(const CircuitBuilder& builder,
                                 const DataMatrix& left,
                                 const DataMatrix& right, Stopwatch* watch,
                                 unsigned threads) {
  const std::vector<StateVector> ls = simulate_rows(builder, left, threads);
  const std::vector<StateVector> rs = simulate_rows(builder, right, threads);

  KernelMatrix k;
  k.rows = left.rows;
  k.cols = right.rows;
  k.values.assign(k.rows * k.cols, 0.0);
  parallel_for(k.rows, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < k.cols; ++j) {
        k.values[i * k.cols + j] =
            std::clamp(std::norm(inner_product(ls[i], rs[j])), 0.0, 1.0);
      }
    }
  });
  if (watch) {
    watch->charge(entry_cost(builder) * static_cast<double>(k.rows * k.cols));
  }
  return k;
}

}  // namespace gateprune
