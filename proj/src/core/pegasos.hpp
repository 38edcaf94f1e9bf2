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
#include <span>
#include <vector>

#include "core/kernel.hpp"
#include "core/timer.hpp"

namespace gateprune {

/// Kernelized Pegasos SVM state: integer support counts per training sample
/// plus the training labels. lambda = 1/(C*m).
struct PegasosModel {
  std::vector<std::uint32_t> alpha;
  std::vector<int> labels;
  double lambda = 0.0;
  double c = 0.0;
  int num_steps = 0;
};

/// Stochastic Pegasos training on a precomputed train x train kernel. At step
/// t a uniform index i is drawn; alpha_i increments when
/// y_i * (1/(lambda t)) * sum_j alpha_j y_j K_ji < 1. Deterministic given the
/// seed.
PegasosModel train_pegasos(const KernelMatrix& kernel,
                           std::span<const int> labels, double c,
                           int num_steps, std::uint64_t seed,
                           Stopwatch* watch = nullptr);

/// sign(sum_j alpha_j y_j K_{j,col}) per evaluation column; a zero decision
/// resolves to +1.
std::vector<int> predict(const PegasosModel& model,
                         const KernelMatrix& kernel_eval);

/// Validation/test outcome. accuracy == (tp+tn)/(tp+tn+fp+fn) exactly.
struct EvalResult {
  double accuracy = 0.0;
  double time_s = 0.0;
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;
};

/// Confusion counts of predictions against truth; time_s is read from the
/// caller's stopwatch, which should have been running since kernel
/// construction began for this model.
EvalResult evaluate(const PegasosModel& model, const KernelMatrix& kernel_eval,
                    std::span<const int> true_labels, const Stopwatch& watch);

}  // namespace gateprune
