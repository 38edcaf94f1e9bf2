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

#include "core/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace gateprune {

using nlohmann::json;

namespace {

constexpr std::uint64_t kStreamGsi = 0x6721u;
constexpr std::uint64_t kStreamPegasos = 0x9e61u;

std::string mask_to_string(const KeepMask& mask) {
  std::string s(mask.size(), '0');
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s[i] = '1';
  }
  return s;
}

std::size_t popcount(const KeepMask& mask) {
  std::size_t n = 0;
  for (bool b : mask) n += b ? 1 : 0;
  return n;
}

json eval_to_json(const EvalResult& e) {
  return json{{"accuracy", e.accuracy}, {"time_s", e.time_s}, {"tp", e.tp},
              {"tn", e.tn},             {"fp", e.fp},         {"fn", e.fn}};
}

json candidate_to_json(const CandidateModel& c, bool ranked) {
  json j{{"threshold", c.threshold},
         {"gates", c.kept_gates},
         {"mask", mask_to_string(c.mask)},
         {"validation", eval_to_json(c.validation)}};
  if (ranked) {
    j["balanced"] = c.balanced;
    j["rank_accuracy"] = c.rank_accuracy;
    j["rank_time"] = c.rank_time;
    j["rank_balanced"] = c.rank_balanced;
    j["equals_baseline"] = c.equals_baseline;
  }
  return j;
}

struct EvaluatedModel {
  EvalResult validation;
  PegasosModel model;
};

// One model end to end on the validation side: train kernel, Pegasos
// training, validation kernel, prediction. The stopwatch spans all of it,
// which is what the per-model time T reports.
EvaluatedModel fit_and_validate(const CircuitBuilder& builder,
                                const DatasetSplit& split,
                                const SvmConfig& svm, std::uint64_t seed,
                                TimerMode mode, unsigned threads) {
  Stopwatch watch(mode);
  const KernelMatrix k_train =
      kernel_matrix_square(builder, split.train_x, &watch, threads);
  PegasosModel model = train_pegasos(k_train, split.train_y, svm.c,
                                     svm.num_steps, seed, &watch);
  const KernelMatrix k_val =
      kernel_matrix_cross(builder, split.train_x, split.val_x, &watch, threads);
  EvalResult validation = evaluate(model, k_val, split.val_y, watch);
  return {std::move(validation), std::move(model)};
}

EvalResult assess_on_test(const CircuitBuilder& builder,
                          const PegasosModel& model, const DatasetSplit& split,
                          TimerMode mode, unsigned threads) {
  Stopwatch watch(mode);
  const KernelMatrix k_test =
      kernel_matrix_cross(builder, split.train_x, split.test_x, &watch, threads);
  return evaluate(model, k_test, split.test_y, watch);
}

}  // namespace

void ScanConfig::validate() const {
  map.validate();
  if (!(threshold_step > 0.0)) {
    throw std::invalid_argument("threshold_step must be > 0");
  }
  if (!(tolerance >= 0.0 && tolerance <= 1.0)) {
    throw std::invalid_argument("tolerance must lie in [0,1]");
  }
  if (!(svm.c > 0.0)) throw std::invalid_argument("C must be > 0");
  if (svm.num_steps < 0) throw std::invalid_argument("num_steps must be >= 0");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (exact_qubit_cap < 1) {
    throw std::invalid_argument("exact_qubit_cap must be >= 1");
  }
  if (engine.kind == EngineKind::Hardware && engine.hardware.shots == 0) {
    throw std::invalid_argument("hardware engine needs shots >= 1");
  }
}

std::vector<double> threshold_grid(std::pair<double, double> range,
                                   double step) {
  const auto [lo, hi] = range;
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  if (lo > hi) throw std::invalid_argument("range lower bound above upper");
  std::vector<double> grid;
  if (lo == hi) {
    grid.push_back(lo);
    return grid;
  }
  for (int k = 0;; ++k) {
    const double t = lo + k * step;
    if (t >= hi) break;  // the upper bound is never used as a cutoff
    grid.push_back(t);
  }
  return grid;
}

std::optional<KeepMask> generate_candidate(const BoundCircuit& baseline,
                                           std::span<const GateMetrics> metrics,
                                           double threshold) {
  if (metrics.size() != baseline.size()) {
    throw std::invalid_argument("metrics do not align with the circuit");
  }
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    if (metrics[i].position != static_cast<int>(i)) {
      throw std::invalid_argument("metrics positions out of order");
    }
  }
  KeepMask mask(metrics.size());
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    mask[i] = metrics[i].gsi >= threshold;  // keep-on-equal boundary
  }

  // STOP when the prune would silence a qubit that the baseline drives.
  std::vector<bool> touched(baseline.circuit.num_qubits, false);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    const GateOp& g = baseline.circuit.gates[i];
    for (int k = 0; k < g.arity(); ++k) touched[g.qubits[k]] = true;
  }
  for (int q : active_qubits(baseline.circuit)) {
    if (!touched[q]) return std::nullopt;
  }
  return mask;
}

double balanced_score(double accuracy_base, double time_base,
                      double accuracy_new, double time_new) {
  if (!(time_base > 0.0)) {
    throw std::invalid_argument("baseline time must be > 0");
  }
  return (accuracy_new - accuracy_base) + (time_base - time_new) / time_base;
}

void rank_candidates(std::vector<CandidateModel>& candidates,
                     double accuracy_base, double tolerance, TimeRule rule) {
  if (candidates.empty()) {
    throw std::invalid_argument("cannot rank an empty candidate list");
  }
  if (!(tolerance >= 0.0 && tolerance <= 1.0)) {
    throw std::invalid_argument("tolerance must lie in [0,1]");
  }

  std::vector<std::size_t> idx(candidates.size());
  std::iota(idx.begin(), idx.end(), 0);
  const auto tie_break = [&candidates](std::size_t a, std::size_t b) {
    if (candidates[a].threshold != candidates[b].threshold) {
      return candidates[a].threshold < candidates[b].threshold;
    }
    return a < b;
  };

  auto order = idx;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (candidates[a].validation.accuracy != candidates[b].validation.accuracy) {
      return candidates[a].validation.accuracy >
             candidates[b].validation.accuracy;
    }
    return tie_break(a, b);
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    candidates[order[r]].rank_accuracy = static_cast<int>(r + 1);
  }

  order = idx;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (candidates[a].balanced != candidates[b].balanced) {
      return candidates[a].balanced > candidates[b].balanced;
    }
    return tie_break(a, b);
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    candidates[order[r]].rank_balanced = static_cast<int>(r + 1);
  }

  // Time ranking with the accuracy floor: failing candidates queue after
  // every passing one, still ordered by time among themselves.
  const double floor = rule == TimeRule::RelativeDrop
                           ? (1.0 - tolerance) * accuracy_base
                           : tolerance * accuracy_base;
  auto passes = [&](std::size_t i) {
    return candidates[i].validation.accuracy >= floor;
  };
  order = idx;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (passes(a) != passes(b)) return passes(a);
    if (candidates[a].validation.time_s != candidates[b].validation.time_s) {
      return candidates[a].validation.time_s < candidates[b].validation.time_s;
    }
    return tie_break(a, b);
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    candidates[order[r]].rank_time = static_cast<int>(r + 1);
  }
}

ScanReport run_scan(const Dataset& dataset, const ScanConfig& config_in) {
  ScanConfig config = config_in;
  config.map.num_features = static_cast<int>(dataset.features.cols);
  config.validate();
  if (config.map.num_features > config.exact_qubit_cap) {
    throw DataError("dataset has " + std::to_string(config.map.num_features) +
                    " features; dense simulation is capped at " +
                    std::to_string(config.exact_qubit_cap) + " qubits");
  }

  ScanReport report;
  const DatasetSplit split =
      split_dataset(dataset.features, dataset.labels, config.seed);

  // One binding vector for the whole scan: a chosen training sample, or the
  // element-wise mean of the training features.
  if (config.bind_sample) {
    if (*config.bind_sample >= split.train_x.rows) {
      throw std::invalid_argument("bind_sample index out of range");
    }
    const auto row = split.train_x.row(*config.bind_sample);
    report.binding.assign(row.begin(), row.end());
  } else {
    report.binding = column_mean(split.train_x);
  }

  const BoundCircuit base_map = build_zz_map(config.map, report.binding);
  if (config.engine.kind == EngineKind::Exact) {
    report.metrics =
        gsi_exact(base_map, config.ent_qubit, SensitivityConfig{config.delta});
  } else {
    HardwareEstimatorConfig hw = config.engine.hardware;
    hw.delta = config.delta;
    hw.seed = derive_seed(config.seed, kStreamGsi);
    if (hw.tomo_qubit < 0 && config.ent_qubit >= 0) {
      hw.tomo_qubit = std::min(config.ent_qubit, config.map.num_features - 1);
    }
    report.metrics = gsi_hardware(base_map, hw);
  }

  report.range = gsi_range(report.metrics);
  report.grid = threshold_grid(report.range, config.threshold_step);

  const unsigned threads = worker_count(config.serial);

  // Baseline: the full map, structurally the candidate at the grid minimum.
  report.baseline.threshold = report.grid.front();
  report.baseline.mask = KeepMask(base_map.size(), true);
  report.baseline.kept_gates = base_map.size();
  report.baseline.equals_baseline = true;
  const CircuitBuilder baseline_builder{config.map, std::nullopt};
  EvaluatedModel baseline_fit = fit_and_validate(
      baseline_builder, split, config.svm,
      derive_seed(config.seed, kStreamPegasos, 0), config.timer, threads);
  report.baseline.validation = baseline_fit.validation;
  const double accuracy_base = report.baseline.validation.accuracy;
  const double time_base = report.baseline.validation.time_s;

  // Candidate cutoffs: everything after the baseline point. A degenerate
  // single-point grid re-emits the baseline-equal candidate so the report
  // always carries at least one rankable model.
  std::vector<double> cutoffs(report.grid.begin() + 1, report.grid.end());
  if (cutoffs.empty()) cutoffs.push_back(report.grid.front());

  std::vector<CircuitBuilder> builders;
  std::vector<PegasosModel> models;
  for (std::size_t c = 0; c < cutoffs.size(); ++c) {
    const double threshold = cutoffs[c];
    const std::optional<KeepMask> mask =
        generate_candidate(base_map, report.metrics, threshold);
    if (!mask) break;  // prune monotonicity: every later cutoff stops too

    CandidateModel cand;
    cand.threshold = threshold;
    cand.mask = *mask;
    cand.kept_gates = popcount(*mask);
    cand.equals_baseline = cand.kept_gates == base_map.size();

    CircuitBuilder builder{config.map, cand.mask};
    EvaluatedModel fit = fit_and_validate(
        builder, split, config.svm,
        derive_seed(config.seed, kStreamPegasos, report.candidates.size() + 1),
        config.timer, threads);
    cand.validation = fit.validation;
    cand.balanced = balanced_score(accuracy_base, time_base,
                                   cand.validation.accuracy,
                                   cand.validation.time_s);
    report.candidates.push_back(std::move(cand));
    builders.push_back(std::move(builder));
    models.push_back(std::move(fit.model));
  }

  if (report.candidates.empty()) {
    char range_msg[96];
    std::snprintf(range_msg, sizeof(range_msg),
                  "every cutoff in [%g, %g) left a qubit without gates",
                  report.range.first, report.range.second);
    throw DataError(range_msg);
  }

  rank_candidates(report.candidates, accuracy_base, config.tolerance,
                  config.time_rule);
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    if (report.candidates[i].rank_accuracy == 1) report.selections.best_accuracy = i;
    if (report.candidates[i].rank_time == 1) report.selections.best_time = i;
    if (report.candidates[i].rank_balanced == 1) report.selections.best_balanced = i;
  }

  report.test_baseline = assess_on_test(baseline_builder, baseline_fit.model,
                                        split, config.timer, threads);
  auto test_of = [&](std::size_t i) {
    return assess_on_test(builders[i], models[i], split, config.timer, threads);
  };
  report.test_best_accuracy = test_of(report.selections.best_accuracy);
  report.test_best_time = test_of(report.selections.best_time);
  report.test_best_balanced = test_of(report.selections.best_balanced);

  report.config_echo = json{
      {"feature_map",
       {{"entanglement",
         config.map.entanglement == Entanglement::Linear ? "linear" : "full"},
        {"reps", config.map.reps},
        {"num_features", config.map.num_features}}},
      {"engine",
       config.engine.kind == EngineKind::Exact
           ? json{{"kind", "exact"}}
           : json{{"kind", "hardware"},
                  {"shots", config.engine.hardware.shots},
                  {"tomo_qubit", config.engine.hardware.tomo_qubit},
                  {"noise",
                   config.engine.hardware.noise
                       ? json{{"p1", config.engine.hardware.noise->p1},
                              {"p2", config.engine.hardware.noise->p2},
                              {"p_ro", config.engine.hardware.noise->p_ro}}
                       : json(nullptr)}}},
      {"threshold_step", config.threshold_step},
      {"svm", {{"C", config.svm.c}, {"num_steps", config.svm.num_steps}}},
      {"seed", config.seed},
      {"tolerance", config.tolerance},
      {"time_rule",
       config.time_rule == TimeRule::RelativeDrop ? "relative" : "literal"},
      {"delta", config.delta},
      {"ent_qubit", config.ent_qubit},
      {"serial", config.serial},
      {"timer",
       config.timer == TimerMode::Wall ? "wall" : "deterministic"},
      {"exact_qubit_cap", config.exact_qubit_cap}};
  if (config.bind_sample) report.config_echo["bind_sample"] = *config.bind_sample;

  return report;
}

json report_to_json(const ScanReport& report) {
  json gsi_table = json::array();
  for (const GateMetrics& m : report.metrics) {
    gsi_table.push_back(json{{"position", m.position},
                             {"gate", m.gate},
                             {"F", m.fidelity},
                             {"E", m.entanglement},
                             {"P", m.sensitivity},
                             {"GSI", m.gsi}});
  }
  json candidates = json::array();
  for (const CandidateModel& c : report.candidates) {
    candidates.push_back(candidate_to_json(c, /*ranked=*/true));
  }
  return json{
      {"config", report.config_echo},
      {"binding", report.binding},
      {"gsi_range", {{"low", report.range.first}, {"high", report.range.second}}},
      {"grid", report.grid},
      {"gsi_table", gsi_table},
      {"baseline", candidate_to_json(report.baseline, /*ranked=*/false)},
      {"candidates", candidates},
      {"selections",
       {{"best_accuracy", report.selections.best_accuracy},
        {"best_time", report.selections.best_time},
        {"best_balanced", report.selections.best_balanced}}},
      {"test_results",
       {{"baseline", eval_to_json(report.test_baseline)},
        {"best_accuracy", eval_to_json(report.test_best_accuracy)},
        {"best_time", eval_to_json(report.test_best_time)},
        {"best_balanced", eval_to_json(report.test_best_balanced)}}}};
}

std::string report_csv_gsi(const ScanReport& report) {
  return metrics_to_csv(report.metrics);
}

std::string report_csv_candidates(const ScanReport& report) {
  std::string out =
      "kind,threshold,gates,accuracy,time_s,balanced,rank_accuracy,rank_time,"
      "rank_balanced\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "baseline,%.17g,%zu,%.17g,%.17g,,,,\n",
                report.baseline.threshold, report.baseline.kept_gates,
                report.baseline.validation.accuracy,
                report.baseline.validation.time_s);
  out += buf;
  for (const CandidateModel& c : report.candidates) {
    std::snprintf(buf, sizeof(buf),
                  "candidate,%.17g,%zu,%.17g,%.17g,%.17g,%d,%d,%d\n",
                  c.threshold, c.kept_gates, c.validation.accuracy,
                  c.validation.time_s, c.balanced, c.rank_accuracy,
                  c.rank_time, c.rank_balanced);
    out += buf;
  }
  return out;
}

std::string report_csv_rankings(const ScanReport& report) {
  std::string out = "threshold,rank_accuracy,rank_time,rank_balanced\n";
  char buf[128];
  for (const CandidateModel& c : report.candidates) {
    std::snprintf(buf, sizeof(buf), "%.17g,%d,%d,%d\n", c.threshold,
                  c.rank_accuracy, c.rank_time, c.rank_balanced);
    out += buf;
  }
  return out;
}

std::string render_report_table(const json& report) {
  auto need = [&report](const char* key) -> const json& {
    if (!report.contains(key)) {
      throw DataError(std::string("report missing field '") + key + "'");
    }
    return report.at(key);
  };
  std::ostringstream out;
  char buf[160];
  try {
    const json& baseline = need("baseline");
    const json& candidates = need("candidates");
    if (!candidates.is_array() || candidates.empty()) {
      throw DataError("report integrity error: empty candidate list");
    }
    out << "threshold  gates  accuracy  time_s      R_ATB\n";
    std::snprintf(buf, sizeof(buf), "%-9.3f  %-5zu  %-8.3f  %-10.4g  %s\n",
                  baseline.at("threshold").get<double>(),
                  baseline.at("gates").get<std::size_t>(),
                  baseline.at("validation").at("accuracy").get<double>(),
                  baseline.at("validation").at("time_s").get<double>(), "--");
    out << buf;
    for (const json& c : candidates) {
      std::snprintf(buf, sizeof(buf),
                    "%-9.3f  %-5zu  %-8.3f  %-10.4g  %d-%d-%d\n",
                    c.at("threshold").get<double>(),
                    c.at("gates").get<std::size_t>(),
                    c.at("validation").at("accuracy").get<double>(),
                    c.at("validation").at("time_s").get<double>(),
                    c.at("rank_accuracy").get<int>(),
                    c.at("rank_time").get<int>(),
                    c.at("rank_balanced").get<int>());
      out << buf;
    }
    const json& sel = need("selections");
    const json& tests = need("test_results");
    out << "\ntest set\n";
    const char* names[4] = {"baseline", "best_accuracy", "best_time",
                            "best_balanced"};
    for (const char* name : names) {
      const json& t = tests.at(name);
      std::string where = "--";
      if (std::string(name) != "baseline") {
        const std::size_t i = sel.at(name).get<std::size_t>();
        std::snprintf(buf, sizeof(buf), "%.3f",
                      candidates.at(i).at("threshold").get<double>());
        where = buf;
      }
      std::snprintf(buf, sizeof(buf), "%-14s  threshold %-8s  %-8.3f  %-10.4g\n",
                    name, where.c_str(), t.at("accuracy").get<double>(),
                    t.at("time_s").get<double>());
      out << buf;
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
  return out.str();
}

ScanConfig scan_config_from_json(const json& j) {
  static const std::set<std::string> known{
      "dataset",    "label_column",  "out_dir",       "feature_map",
      "engine",     "threshold_step", "svm",          "seed",
      "tolerance",  "time_rule",     "delta",         "ent_qubit",
      "bind_sample", "serial",       "timer",         "exact_qubit_cap",
      "bench"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw std::invalid_argument("unknown config key '" + it.key() + "'");
    }
  }

  ScanConfig cfg;
  try {
    if (j.contains("feature_map")) {
      const json& fm = j.at("feature_map");
      if (fm.contains("entanglement")) {
        const std::string e = fm.at("entanglement").get<std::string>();
        if (e == "linear") {
          cfg.map.entanglement = Entanglement::Linear;
        } else if (e == "full") {
          cfg.map.entanglement = Entanglement::Full;
        } else {
          throw std::invalid_argument("entanglement must be linear or full");
        }
      }
      if (fm.contains("reps")) cfg.map.reps = fm.at("reps").get<int>();
    }
    cfg.map.num_features = 1;  // placeholder; run_scan fills from the dataset

    if (j.contains("engine")) {
      const json& e = j.at("engine");
      const std::string kind = e.value("kind", "exact");
      if (kind == "exact") {
        cfg.engine.kind = EngineKind::Exact;
      } else if (kind == "hardware") {
        cfg.engine.kind = EngineKind::Hardware;
        cfg.engine.hardware.shots = e.value("shots", std::uint64_t{4096});
        cfg.engine.hardware.tomo_qubit = e.value("tomo_qubit", -1);
        if (e.contains("noise") && !e.at("noise").is_null()) {
          NoiseSpec noise;
          noise.p1 = e.at("noise").value("p1", 0.0);
          noise.p2 = e.at("noise").value("p2", 0.0);
          noise.p_ro = e.at("noise").value("p_ro", 0.0);
          noise.validate();
          cfg.engine.hardware.noise = noise;
        }
      } else {
        throw std::invalid_argument("engine kind must be exact or hardware");
      }
    }

    if (j.contains("svm")) {
      cfg.svm.c = j.at("svm").value("C", cfg.svm.c);
      cfg.svm.num_steps = j.at("svm").value("num_steps", cfg.svm.num_steps);
    }
    cfg.threshold_step = j.value("threshold_step", cfg.threshold_step);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    if (j.contains("time_rule")) {
      const std::string rule = j.at("time_rule").get<std::string>();
      if (rule == "relative") {
        cfg.time_rule = TimeRule::RelativeDrop;
      } else if (rule == "literal") {
        cfg.time_rule = TimeRule::Literal;
      } else {
        throw std::invalid_argument("time_rule must be relative or literal");
      }
    }
    cfg.delta = j.value("delta", cfg.delta);
    cfg.ent_qubit = j.value("ent_qubit", cfg.ent_qubit);
    if (j.contains("bind_sample") && !j.at("bind_sample").is_null()) {
      cfg.bind_sample = j.at("bind_sample").get<std::size_t>();
    }
    cfg.serial = j.value("serial", cfg.serial);
    if (j.contains("timer")) {
      const std::string t = j.at("timer").get<std::string>();
      if (t == "wall") {
        cfg.timer = TimerMode::Wall;
      } else if (t == "deterministic") {
        cfg.timer = TimerMode::Deterministic;
      } else {
        throw std::invalid_argument("timer must be wall or deterministic");
      }
    }
    cfg.exact_qubit_cap = j.value("exact_qubit_cap", cfg.exact_qubit_cap);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  return cfg;
}

}  // namespace gateprune
