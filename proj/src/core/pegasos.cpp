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

#include "core/pegasos.hpp"

#include <stdexcept>

#include "core/rng.hpp"

namespace gateprune {

PegasosModel train_pegasos(const KernelMatrix& kernel,
                           std::span<const int> labels, double c,
                           int num_steps, std::uint64_t seed,
                           Stopwatch* watch) {
  const std::size_t m = labels.size();
  if (m == 0) throw std::invalid_argument("empty training set");
  if (kernel.rows != m || kernel.cols != m) {
    throw std::invalid_argument("training kernel must be square over labels");
  }
  for (int y : labels) {
    if (y != -1 && y != 1) {
      throw std::invalid_argument("labels must be in {-1,+1}");
    }
  }
  if (!(c > 0.0)) throw std::invalid_argument("C must be > 0");
  if (num_steps < 0) throw std::invalid_argument("num_steps must be >= 0");

  PegasosModel model;
  model.alpha.assign(m, 0);
  model.labels.assign(labels.begin(), labels.end());
  model.c = c;
  model.num_steps = num_steps;
  model.lambda = 1.0 / (c * static_cast<double>(m));

  Rng rng(derive_seed(seed, 0x9e6a5u));
  for (int t = 1; t <= num_steps; ++t) {
    const std::size_t i = rng.uniform_index(m);
    double decision = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (model.alpha[j] == 0) continue;
      decision += static_cast<double>(model.alpha[j]) * model.labels[j] *
                  kernel.at(j, i);
    }
    decision /= model.lambda * static_cast<double>(t);
    if (static_cast<double>(labels[i]) * decision < 1.0) ++model.alpha[i];
  }
  if (watch) watch->charge(static_cast<double>(num_steps));
  return model;
}

std::vector<int> predict(const PegasosModel& model,
                         const KernelMatrix& kernel_eval) {
  if (kernel_eval.rows != model.alpha.size()) {
    throw std::invalid_argument(
        "evaluation kernel rows must match training size");
  }
  std::vector<int> out(kernel_eval.cols);
  for (std::size_t c = 0; c < kernel_eval.cols; ++c) {
    double margin = 0.0;
    for (std::size_t j = 0; j < kernel_eval.rows; ++j) {
      if (model.alpha[j] == 0) continue;
      margin += static_cast<double>(model.alpha[j]) * model.labels[j] *
                kernel_eval.at(j, c);
    }
    out[c] = margin < 0.0 ? -1 : +1;  // zero decision breaks to +1
  }
  return out;
}

EvalResult evaluate(const PegasosModel& model, const KernelMatrix& kernel_eval,
                    std::span<const int> true_labels, const Stopwatch& watch) {
  if (true_labels.size() != kernel_eval.cols) {
    throw std::invalid_argument("label count must match evaluation columns");
  }
  for (int y : true_labels) {
    if (y != -1 && y != 1) {
      throw std::invalid_argument("labels must be in {-1,+1}");
    }
  }
  const std::vector<int> preds = predict(model, kernel_eval);
  EvalResult r;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i] == 1) {
      (true_labels[i] == 1 ? r.tp : r.fp)++;
    } else {
      (true_labels[i] == -1 ? r.tn : r.fn)++;
    }
  }
  const std::int64_t total = r.tp + r.tn + r.fp + r.fn;
  r.accuracy =
      total == 0 ? 0.0 : static_cast<double>(r.tp + r.tn) / static_cast<double>(total);
  r.time_s = watch.elapsed_s();
  return r;
}

}  // namespace gateprune
