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

// Acceptance suite. Each criterion runs independently, prints exactly one
// PASS/FAIL line, and the process exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/bench.hpp"
#include "core/dataset.hpp"
#include "core/density.hpp"
#include "core/gsi.hpp"
#include "core/kernel.hpp"
#include "core/pegasos.hpp"
#include "core/pipeline.hpp"
#include "core/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gateprune;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& why) {
    if (!condition && ok) {
      ok = false;
      detail = why;
    }
  }
};

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string fixture(const std::string& name) {
  return std::string(GATEPRUNE_DATA_DIR) + "/" + name;
}

BoundCircuit random_bound_map(std::uint64_t seed) {
  Rng rng(seed);
  FeatureMapSpec spec;
  spec.num_features = 2 + static_cast<int>(rng.uniform_index(7));  // 2..8
  spec.reps = 1 + static_cast<int>(rng.uniform_index(3));          // 1..3
  spec.entanglement = rng.uniform_index(2) == 0 ? Entanglement::Linear
                                                : Entanglement::Full;
  std::vector<double> x(spec.num_features);
  for (double& v : x) v = rng.uniform();
  return build_zz_map(spec, x);
}

// ---- criterion 1: GSI bounds + stored decomposition identity --------------

Check criterion_bounds() {
  Check c;
  const double t0 = now_s();
  int circuits = 0;
  for (std::uint64_t seed = 0; seed < 1000 && c.ok; ++seed) {
    const BoundCircuit bound = random_bound_map(240000 + seed);
    ++circuits;
    for (const GateMetrics& m : gsi_exact(bound)) {
      c.require(m.fidelity >= 0.0 && m.fidelity <= 1.0, "F out of [0,1]");
      c.require(m.entanglement >= 0.0 && m.entanglement <= 1.0,
                "E out of [0,1]");
      c.require(m.sensitivity >= 0.0 && m.sensitivity <= 1.0,
                "P out of [0,1]");
      c.require(m.gsi >= 0.0 && m.gsi <= 1.0, "GSI out of [0,1]");
      c.require(m.gsi == (m.fidelity + m.entanglement +
                          (1.0 - m.sensitivity)) / 3.0,
                "stored GSI != (F+E+(1-P))/3");
    }
  }
  const double elapsed = now_s() - t0;
  c.require(circuits >= 1000, "fewer than 1000 circuits scored");
  c.require(elapsed < 60.0,
            "runtime " + std::to_string(elapsed) + "s exceeds 60s");
  if (c.ok) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d circuits in %.1fs", circuits, elapsed);
    c.detail = buf;
  }
  return c;
}

// ---- criterion 2: estimator consistency on the 17-gate map ----------------

Check criterion_estimator_consistency() {
  Check c;
  const double t0 = now_s();
  const FeatureMapSpec spec{4, Entanglement::Linear, 1};
  // Binding chosen so the probe qubit is never left near the Bloch-sphere
  // surface with a non-deterministic measurement, where the entropy
  // estimator's derivative blows up.
  const std::vector<double> x{1.0 - 1.0 / std::numbers::pi, 0.0, 0.25, 0.7};
  const BoundCircuit bound = build_zz_map(spec, x);
  if (bound.size() != 17) {
    c.require(false, "expected a 17-gate map");
    return c;
  }

  const auto exact = gsi_exact(bound, /*ent_qubit=*/1);
  HardwareEstimatorConfig cfg;
  cfg.shots = 1000000;
  cfg.seed = 424242;
  cfg.delta = 0.1;
  const auto estimated = gsi_hardware(bound, cfg);

  double worst = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double df = std::abs(estimated[i].fidelity - exact[i].fidelity);
    const double de = std::abs(estimated[i].entanglement - exact[i].entanglement);
    const double dp = std::abs(estimated[i].sensitivity - exact[i].sensitivity);
    worst = std::max({worst, df, de, dp});
    c.require(df < 5e-3, "gate " + std::to_string(i) + " |dF| = " + std::to_string(df));
    c.require(de < 5e-3, "gate " + std::to_string(i) + " |dE| = " + std::to_string(de));
    c.require(dp < 5e-3, "gate " + std::to_string(i) + " |dP| = " + std::to_string(dp));
  }
  const double elapsed = now_s() - t0;
  c.require(elapsed < 300.0, "runtime exceeds 5 minutes");
  if (c.ok) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max component deviation %.2e in %.1fs",
                  worst, elapsed);
    c.detail = buf;
  }
  return c;
}

// ---- criterion 3: analytic spot checks ------------------------------------

Check criterion_spot_checks() {
  Check c;
  Circuit h_first(2);
  h_first.append(GateOp::h(0));
  BoundCircuit wrapped;
  wrapped.circuit = h_first;
  wrapped.provenance.assign(1, GateProvenance{});
  const auto metrics = gsi_exact(wrapped);
  c.require(std::abs(metrics[0].fidelity - 0.5) <= 1e-12,
            "first-gate H fidelity != 0.5");

  StateVector bell(2);
  bell = apply_gate(bell, GateOp::h(0));
  bell = apply_gate(bell, GateOp::cnot(0, 1));
  const int keep[] = {0};
  const double entropy = von_neumann_entropy(partial_trace(bell, keep));
  c.require(std::abs(entropy - 1.0) <= 1e-10, "Bell reduced entropy != 1");

  Eigen::MatrixXcd plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const double delta = 0.1;
  const double f = std::cos(delta / 2.0) * std::cos(delta / 2.0);
  const double mean = (1.0 + 2.0 * f) / 3.0;
  const double closed_form = std::sqrt(
      ((1.0 - mean) * (1.0 - mean) + 2.0 * (f - mean) * (f - mean)) / 3.0);
  const double got =
      sensitivity_exact(DensityMatrix(plus), GateOp::p(0, 0.37), {delta});
  c.require(std::abs(got - closed_form) <= 1e-6,
            "P(theta) on |+> sensitivity != closed form");
  c.require(std::abs(closed_form - 1.178e-3) < 1e-5,
            "closed form drifted from 1.178e-3");
  if (c.ok) c.detail = "H fidelity, Bell entropy, |+> sensitivity";
  return c;
}

// ---- criterion 4: gate census ----------------------------------------------

Check criterion_gate_census() {
  Check c;
  const std::vector<double> x9(9, 0.5);
  const BoundCircuit glass = build_zz_map({9, Entanglement::Linear, 1}, x9);
  c.require(glass.size() == 42, "9-feature linear r1 map != 42 gates");

  KeepMask mask(42, true);
  for (std::size_t i : {0u, 9u, 19u, 20u, 21u, 23u, 25u, 27u, 29u, 31u}) {
    mask[i] = false;
  }
  c.require(prune(glass, mask).size() == 32, "42 minus 10 != 32 gates");

  const std::vector<double> x10(10, 0.5);
  c.require(build_zz_map({10, Entanglement::Linear, 1}, x10).size() == 47,
            "S1 at n=10 != 47");
  c.require(build_zz_map({10, Entanglement::Linear, 3}, x10).size() == 141,
            "S2 at n=10 != 141");
  c.require(build_zz_map({10, Entanglement::Full, 1}, x10).size() == 155,
            "S3 at n=10 != 155");
  if (c.ok) c.detail = "42 gates, 42-10=32, S1/S2/S3 = 47/141/155";
  return c;
}

// ---- criterion 5: published ranking pattern --------------------------------

Check criterion_rank_pattern() {
  Check c;
  // Synthetic 42-gate metrics whose range and census reproduce the published
  // cutoffs {0.518, 0.538, 0.558, 0.578} and kept counts 42/33/29/28.
  const std::vector<double> x9(9, 0.5);
  const BoundCircuit bound = build_zz_map({9, Entanglement::Linear, 1}, x9);
  std::vector<GateMetrics> metrics(42);
  for (int i = 0; i < 42; ++i) {
    metrics[i].position = i;
    metrics[i].gate = bound.circuit.gates[i].name();
  }
  for (int i = 0; i < 9; ++i) metrics[i].gsi = 0.58;       // H layer = max
  metrics[9].gsi = 0.518;                                   // the minimum
  for (int i = 10; i < 18; ++i) metrics[i].gsi = 0.52;      // drop at 0.538
  for (int i = 18; i < 22; ++i) metrics[i].gsi = 0.545;     // drop at 0.558
  metrics[22].gsi = 0.565;                                  // drop at 0.578
  for (int i = 23; i < 42; ++i) metrics[i].gsi = 0.5785;    // survivors

  const auto range = gsi_range(metrics);
  c.require(std::abs(range.first - 0.518) < 1e-12, "GSI_l != 0.518");
  const std::vector<double> grid = threshold_grid(range, 0.02);
  c.require(grid.size() == 4, "grid size != 4");
  const double cutoffs[4] = {0.518, 0.538, 0.558, 0.578};
  for (int i = 0; i < 4; ++i) {
    c.require(std::abs(grid[i] - cutoffs[i]) < 1e-9, "cutoff drifted");
  }

  const std::size_t expected_kept[4] = {42, 33, 29, 28};
  std::vector<CandidateModel> candidates;
  // Published (accuracy, seconds) pairs for the three non-baseline rows.
  const double published[3][2] = {{0.785, 144.0}, {0.892, 116.0}, {0.628, 103.0}};
  const double accuracy_base = 0.792;
  const double time_base = 187.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto mask = generate_candidate(bound, metrics, grid[g]);
    c.require(mask.has_value(), "unexpected STOP");
    if (!mask) return c;
    const std::size_t kept =
        static_cast<std::size_t>(std::count(mask->begin(), mask->end(), true));
    c.require(kept == expected_kept[g], "kept count mismatch at cutoff");
    if (g == 0) continue;  // baseline row, unranked
    CandidateModel cand;
    cand.threshold = grid[g];
    cand.mask = *mask;
    cand.kept_gates = kept;
    cand.validation.accuracy = published[g - 1][0];  // stub evaluator
    cand.validation.time_s = published[g - 1][1];
    cand.balanced = balanced_score(accuracy_base, time_base,
                                   cand.validation.accuracy,
                                   cand.validation.time_s);
    candidates.push_back(std::move(cand));
  }
  rank_candidates(candidates, accuracy_base, 0.15, TimeRule::RelativeDrop);
  const int expect[3][3] = {{2, 2, 3}, {1, 1, 1}, {3, 3, 2}};
  for (int i = 0; i < 3; ++i) {
    c.require(candidates[i].rank_accuracy == expect[i][0] &&
                  candidates[i].rank_time == expect[i][1] &&
                  candidates[i].rank_balanced == expect[i][2],
              "rank pattern mismatch on candidate " + std::to_string(i));
  }
  if (c.ok) c.detail = "cutoffs 0.518..0.578, ranks 2-2-3 / 1-1-1 / 3-3-2";
  return c;
}

// ---- criterion 6: stop criterion property -----------------------------------

Check criterion_stop() {
  Check c;
  int stops_seen = 0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const BoundCircuit bound = random_bound_map(777000 + trial);
    Rng rng(trial);
    std::vector<GateMetrics> metrics(bound.size());
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      metrics[i].position = static_cast<int>(i);
      metrics[i].gate = bound.circuit.gates[i].name();
      metrics[i].gsi = rng.uniform();
    }
    // Force a victim qubit to die at threshold t*: every one of its gates
    // scores below t*, and at least one other gate scores above.
    const int victim =
        static_cast<int>(rng.uniform_index(bound.circuit.num_qubits));
    const double t_star = 0.5 + 0.4 * rng.uniform();
    double victim_max = 0.0;
    for (std::size_t i = 0; i < bound.size(); ++i) {
      const GateOp& g = bound.circuit.gates[i];
      bool touches = false;
      for (int k = 0; k < g.arity(); ++k) touches |= g.qubits[k] == victim;
      if (touches) {
        metrics[i].gsi = t_star * rng.uniform() * 0.99;
        victim_max = std::max(victim_max, metrics[i].gsi);
      }
    }

    c.require(!generate_candidate(bound, metrics, t_star).has_value(),
              "no STOP at the forcing threshold");
    ++stops_seen;

    // Just below the victim's strongest gate everything is still alive, and
    // every emitted candidate keeps all qubits active.
    for (double t : {victim_max * 0.5, victim_max * 0.99}) {
      const auto mask = generate_candidate(bound, metrics, t);
      if (mask) {
        const BoundCircuit kept = prune(bound, *mask);
        c.require(active_qubits(kept.circuit) ==
                      active_qubits(bound.circuit),
                  "emitted candidate lost a qubit");
      }
    }
  }
  c.require(stops_seen == 200, "expected 200 forced instances");
  if (c.ok) c.detail = "200 random instances";
  return c;
}

// ---- criterion 7: classifier sanity ------------------------------------------

Check criterion_classifier() {
  Check c;
  const double t0 = now_s();
  const Dataset ds = ingest_csv(fixture("separable.csv"));
  const CircuitBuilder builder{
      FeatureMapSpec{static_cast<int>(ds.features.cols), Entanglement::Linear, 1},
      std::nullopt};
  double worst = 1.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const DatasetSplit split = split_dataset(ds.features, ds.labels, seed);
    const KernelMatrix k_train = kernel_matrix_square(builder, split.train_x);
    const PegasosModel model = train_pegasos(k_train, split.train_y, 5000.0,
                                             500, derive_seed(seed, 0x9e61u));
    const KernelMatrix k_test =
        kernel_matrix_cross(builder, split.train_x, split.test_x);
    Stopwatch watch(TimerMode::Deterministic);
    const EvalResult result = evaluate(model, k_test, split.test_y, watch);
    worst = std::min(worst, result.accuracy);
    c.require(result.accuracy >= 0.9,
              "seed " + std::to_string(seed) + " accuracy " +
                  std::to_string(result.accuracy) + " < 0.9");
  }
  const double elapsed = now_s() - t0;
  c.require(elapsed < 120.0, "runtime exceeds 2 minutes");
  if (c.ok) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst of 5 seeds %.3f in %.1fs", worst,
                  elapsed);
    c.detail = buf;
  }
  return c;
}

// ---- criterion 8: end-to-end determinism of cmd_scan -------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(GATEPRUNE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Check criterion_cmd_scan_determinism() {
  Check c;
  const fs::path dir =
      fs::temp_directory_path() / "gateprune_acceptance_scan";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto write_config = [&](const std::string& name, const std::string& timer,
                          const std::string& out) {
    json cfg{{"dataset", fixture("separable.csv")},
             {"out_dir", (dir / out).string()},
             {"svm", {{"C", 5000}, {"num_steps", 500}}},
             {"seed", 20260811},
             {"timer", timer},
             {"serial", true}};
    const fs::path path = dir / name;
    std::ofstream(path) << cfg.dump();
    return path.string();
  };

  // Two identically-seeded runs with the injected deterministic clock must
  // agree byte for byte (which subsumes "identical except wall-time fields").
  const std::string cfg1 = write_config("a.json", "deterministic", "out_a");
  const std::string cfg2 = write_config("b.json", "deterministic", "out_b");
  c.require(run_cli("scan --config " + cfg1) == 0, "first scan failed");
  c.require(run_cli("scan --config " + cfg2) == 0, "second scan failed");
  if (!c.ok) return c;
  const std::string report_a = slurp(dir / "out_a" / "report.json");
  const std::string report_b = slurp(dir / "out_b" / "report.json");
  c.require(!report_a.empty() && report_a == report_b,
            "deterministic-clock reports differ");

  // A wall-clock run must agree on everything except time-derived fields.
  const std::string cfg3 = write_config("c.json", "wall", "out_c");
  c.require(run_cli("scan --config " + cfg3) == 0, "wall-clock scan failed");
  if (!c.ok) return c;
  auto strip_times = [](json j) {
    std::function<void(json&)> walk = [&](json& node) {
      if (node.is_object()) {
        node.erase("time_s");
        node.erase("balanced");
        node.erase("rank_time");
        node.erase("rank_balanced");
        node.erase("best_time");
        node.erase("best_balanced");
        node.erase("best_time");
        node.erase("timer");
        for (auto& [key, value] : node.items()) walk(value);
      } else if (node.is_array()) {
        for (auto& value : node) walk(value);
      }
    };
    walk(j);
    return j;
  };
  const json ja = strip_times(json::parse(report_a));
  const json jc = strip_times(json::parse(slurp(dir / "out_c" / "report.json")));
  c.require(ja == jc, "wall-clock run differs beyond time-derived fields");

  // Kept-gate counts never increase along the grid.
  const json report = json::parse(report_a);
  std::size_t prev = report["baseline"]["gates"].get<std::size_t>();
  for (const json& cand : report["candidates"]) {
    const std::size_t kept = cand["gates"].get<std::size_t>();
    c.require(kept <= prev, "kept-gate counts increased along the grid");
    prev = kept;
  }
  c.require(report["candidates"].size() >= 1, "no candidates in report");

  fs::remove_all(dir);
  if (c.ok) {
    c.detail = "byte-identical reports, " +
               std::to_string(report["candidates"].size()) +
               " candidates, non-increasing gates";
  }
  return c;
}

// ---- criterion 9: balanced metric vs published row ---------------------------

Check criterion_balanced() {
  Check c;
  const double b = balanced_score(0.591, 213.0, 0.845, 172.0);
  c.require(std::abs(b - 0.4465) <= 5e-4,
            "B = " + std::to_string(b) + " not within 5e-4 of 0.4465");
  if (c.ok) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "B = %.4f", b);
    c.detail = buf;
  }
  return c;
}

// ---- criterion 10: bench smoke ----------------------------------------------

Check criterion_bench() {
  Check c;
  const double t0 = now_s();
  const std::vector<std::string> configs{"S1"};
  const std::vector<int> qubits{4, 6, 8, 10};
  const auto rows = bench_scalability(configs, qubits, EngineConfig{}, 16, 0.1,
                                      1);
  c.require(rows.size() == 4, "expected 4 bench rows");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    c.require(rows[i].gates > rows[i - 1].gates,
              "gate counts not strictly increasing");
  }
  const double elapsed = now_s() - t0;
  c.require(elapsed < 120.0, "runtime exceeds 2 minutes");
  if (c.ok) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "gates 17/27/37/47 in %.1fs", elapsed);
    c.detail = buf;
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"GSI bounds and decomposition identity", criterion_bounds},
      {"estimator consistency at 1e6 shots", criterion_estimator_consistency},
      {"analytic spot checks", criterion_spot_checks},
      {"gate census", criterion_gate_census},
      {"published ranking pattern", criterion_rank_pattern},
      {"stop criterion", criterion_stop},
      {"classifier sanity", criterion_classifier},
      {"cmd_scan determinism", criterion_cmd_scan_determinism},
      {"balanced metric", criterion_balanced},
      {"bench smoke", criterion_bench},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu (%s)%s%s\n", result.ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name, result.detail.empty() ? "" : ": ",
                result.detail.c_str());
    std::fflush(stdout);
    failures += result.ok ? 0 : 1;
  }
  return failures;
}
