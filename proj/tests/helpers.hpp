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

#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "core/circuit.hpp"
#include "core/feature_map.hpp"
#include "core/rng.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(GATEPRUNE_DATA_DIR) + "/" + name;
}

/// Fresh scratch directory under the build tree.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("gateprune_test_" + tag + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

/// Random circuit over the project gate set; angles uniform in [0, 2pi).
inline gateprune::Circuit random_circuit(int num_qubits, int num_gates,
                                         std::uint64_t seed) {
  gateprune::Rng rng(seed);
  gateprune::Circuit c(num_qubits);
  for (int i = 0; i < num_gates; ++i) {
    const int kind = static_cast<int>(rng.uniform_index(num_qubits > 1 ? 6 : 5));
    const int q = static_cast<int>(rng.uniform_index(num_qubits));
    const double theta = rng.uniform() * 2.0 * std::numbers::pi;
    switch (kind) {
      case 0: c.append(gateprune::GateOp::h(q)); break;
      case 1: c.append(gateprune::GateOp::x(q)); break;
      case 2: c.append(gateprune::GateOp::p(q, theta)); break;
      case 3: c.append(gateprune::GateOp::rz(q, theta)); break;
      case 4: c.append(gateprune::GateOp::rx(q, theta)); break;
      default: {
        int t = static_cast<int>(rng.uniform_index(num_qubits - 1));
        if (t >= q) ++t;
        c.append(gateprune::GateOp::cnot(q, t));
      }
    }
  }
  return c;
}

/// Random bound ZZ map: width in [2,8], reps in [1,3], either pattern.
inline gateprune::BoundCircuit random_bound_map(std::uint64_t seed) {
  gateprune::Rng rng(seed);
  gateprune::FeatureMapSpec spec;
  spec.num_features = 2 + static_cast<int>(rng.uniform_index(7));
  spec.reps = 1 + static_cast<int>(rng.uniform_index(3));
  spec.entanglement = rng.uniform_index(2) == 0 ? gateprune::Entanglement::Linear
                                                : gateprune::Entanglement::Full;
  std::vector<double> x(spec.num_features);
  for (double& v : x) v = rng.uniform();
  return gateprune::build_zz_map(spec, x);
}

}  // namespace testutil
