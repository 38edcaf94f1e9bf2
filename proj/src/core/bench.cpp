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

#include "core/bench.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace gateprune {

namespace {

FeatureMapSpec spec_for(const std::string& config, int qubits) {
  FeatureMapSpec spec;
  spec.num_features = qubits;
  if (config == "S1") {
    spec.entanglement = Entanglement::Linear;
    spec.reps = 1;
  } else if (config == "S2") {
    spec.entanglement = Entanglement::Linear;
    spec.reps = 3;
  } else if (config == "S3") {
    spec.entanglement = Entanglement::Full;
    spec.reps = 1;
  } else {
    throw std::invalid_argument("bench config must be S1, S2 or S3");
  }
  return spec;
}

}  // namespace

std::vector<BenchRow> bench_scalability(std::span<const std::string> configs,
                                        std::span<const int> qubit_counts,
                                        const EngineConfig& engine,
                                        int exact_qubit_cap, double delta,
                                        std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (const std::string& config : configs) {
    for (int n : qubit_counts) {
      if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
      if (engine.kind == EngineKind::Exact && n > exact_qubit_cap) {
        throw DataError("exact engine capped at " +
                        std::to_string(exact_qubit_cap) +
                        " qubits (requested " + std::to_string(n) + ")");
      }
      const FeatureMapSpec spec = spec_for(config, n);

      // Fixed synthetic binding so timings are comparable across runs.
      std::vector<double> x(n);
      Rng rng(derive_seed(seed, 0xbe9c4u, static_cast<std::uint64_t>(n)));
      for (double& v : x) v = rng.uniform();
      const BoundCircuit bound = build_zz_map(spec, x);

      const auto t0 = std::chrono::steady_clock::now();
      if (engine.kind == EngineKind::Exact) {
        gsi_exact(bound, -1, SensitivityConfig{delta});
      } else {
        HardwareEstimatorConfig hw = engine.hardware;
        hw.delta = delta;
        hw.seed = derive_seed(seed, 0xbe9c5u, static_cast<std::uint64_t>(n));
        gsi_hardware(bound, hw);
      }
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      rows.push_back({config, n, bound.size(), seconds});
    }
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out = "config,qubits,gates,time_s\n";
  char buf[96];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%zu,%.6f\n", r.config.c_str(),
                  r.qubits, r.gates, r.seconds);
    out += buf;
  }
  return out;
}

}  // namespace gateprune
