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
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/dataset.hpp"
#include "core/gsi.hpp"
#include "core/pegasos.hpp"
#include "core/timer.hpp"

namespace gateprune {

enum class EngineKind { Exact, Hardware };

/// Accuracy floor applied when ranking by time. RelativeDrop keeps candidates
/// within a 15% (tolerance) relative drop from the baseline accuracy; Literal
/// applies the looser reading, accuracy >= tolerance * baseline.
enum class TimeRule { RelativeDrop, Literal };

struct SvmConfig {
  double c = 5000.0;
  int num_steps = 500;
};

struct EngineConfig {
  EngineKind kind = EngineKind::Exact;
  HardwareEstimatorConfig hardware;  // used when kind == Hardware
};

struct ScanConfig {
  FeatureMapSpec map;  // num_features is overwritten from the dataset
  EngineConfig engine;
  double threshold_step = 0.02;
  SvmConfig svm;
  std::uint64_t seed = 12345;
  double tolerance = 0.15;
  TimeRule time_rule = TimeRule::RelativeDrop;
  double delta = 0.1;
  int ent_qubit = -1;
  /// Bind the GSI circuit with this training sample instead of the
  /// element-wise mean of the training features.
  std::optional<std::size_t> bind_sample;
  bool serial = false;
  TimerMode timer = TimerMode::Wall;
  int exact_qubit_cap = 16;

  void validate() const;
};

/// One pruned model in the scan.
struct CandidateModel {
  double threshold = 0.0;
  KeepMask mask;
  std::size_t kept_gates = 0;
  EvalResult validation;
  double balanced = 0.0;
  int rank_accuracy = 0;
  int rank_time = 0;
  int rank_balanced = 0;
  bool equals_baseline = false;
};

struct Selections {
  std::size_t best_accuracy = 0;  // indices into candidates
  std::size_t best_time = 0;
  std::size_t best_balanced = 0;
};

struct ScanReport {
  nlohmann::json config_echo;
  std::vector<double> binding;
  std::vector<GateMetrics> metrics;
  std::pair<double, double> range{0.0, 0.0};
  std::vector<double> grid;
  CandidateModel baseline;  // all-true mask at the range minimum, unranked
  std::vector<CandidateModel> candidates;
  Selections selections;
  EvalResult test_baseline;
  EvalResult test_best_accuracy;
  EvalResult test_best_time;
  EvalResult test_best_balanced;
};

/// Thresholds GSI_l, GSI_l + step, ... strictly below GSI_u; a degenerate
/// range yields the single point GSI_l.
std::vector<double> threshold_grid(std::pair<double, double> range, double step);

/// Keep mask for one cutoff (gate kept iff gsi >= threshold), or nullopt
/// (STOP) when the mask would leave some qubit of the baseline without any
/// gate.
std::optional<KeepMask> generate_candidate(const BoundCircuit& baseline,
                                           std::span<const GateMetrics> metrics,
                                           double threshold);

/// B = (A_n - A_b) + (T_b - T_n)/T_b.
double balanced_score(double accuracy_base, double time_base,
                      double accuracy_new, double time_new);

/// Fills rank_accuracy / rank_time / rank_balanced (1 = best) in place. Time
/// ranking demotes candidates failing the accuracy floor below every passing
/// one. Ties break toward the lower threshold, then the earlier list
/// position, so each ranking is a fixed total order.
void rank_candidates(std::vector<CandidateModel>& candidates,
                     double accuracy_base, double tolerance,
                     TimeRule rule = TimeRule::RelativeDrop);

/// The full scan: split, bind, score, sweep thresholds, train and validate
/// one model per cutoff, rank, and assess the selected models on the test
/// split.
ScanReport run_scan(const Dataset& dataset, const ScanConfig& config);

nlohmann::json report_to_json(const ScanReport& report);
std::string report_csv_gsi(const ScanReport& report);
std::string report_csv_candidates(const ScanReport& report);
std::string report_csv_rankings(const ScanReport& report);

/// Paper-style summary table of a serialized report; throws DataError when
/// required fields are missing or malformed.
std::string render_report_table(const nlohmann::json& report);

/// Parses the shared config keys (engine, svm, seed, step, ...) with
/// defaults; unknown keys are rejected to catch typos early.
ScanConfig scan_config_from_json(const nlohmann::json& j);

}  // namespace gateprune
