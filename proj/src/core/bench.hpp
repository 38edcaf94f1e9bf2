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
#include <string>
#include <vector>

#include "core/pipeline.hpp"

namespace gateprune {

/// GSI runtime measurement for one (configuration, width) point.
struct BenchRow {
  std::string config;  // S1 = linear r1, S2 = linear r3, S3 = full r1
  int qubits = 0;
  std::size_t gates = 0;
  double seconds = 0.0;
};

/// Runs one GSI computation per (config, qubit count) with a fixed synthetic
/// binding and reports gate count and wall time. Exact-engine runs refuse
/// widths beyond `exact_qubit_cap`.
std::vector<BenchRow> bench_scalability(std::span<const std::string> configs,
                                        std::span<const int> qubit_counts,
                                        const EngineConfig& engine,
                                        int exact_qubit_cap, double delta,
                                        std::uint64_t seed);

/// CSV with header "config,qubits,gates,time_s".
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace gateprune
