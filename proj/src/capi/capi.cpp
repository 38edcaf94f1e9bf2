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

#include "gateprune/gateprune.h"

#include <cstdio>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "core/bench.hpp"
#include "core/dataset.hpp"
#include "core/errors.hpp"
#include "core/feature_map.hpp"
#include "core/gsi.hpp"
#include "core/pipeline.hpp"
#include "core/rng.hpp"

using nlohmann::json;

// Handle bodies. The header only forward-declares these types.
struct gp_dataset {
  gateprune::Dataset value;
};
struct gp_circuit {
  gateprune::BoundCircuit value;
};
struct gp_metrics {
  std::vector<gateprune::GateMetrics> value;
};
struct gp_report {
  gateprune::ScanReport value;
};

namespace {

thread_local std::string g_last_error;

gp_status fail(gp_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes + last-error text.
template <typename Fn>
gp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const gateprune::DataError& e) {
    return fail(GP_ERR_DATA, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const json::exception& e) {
    return fail(GP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GP_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gp_status require(bool ok, const char* what) {
  return ok ? GP_OK : fail(GP_ERR_INVALID_ARGUMENT, what);
}

json parse_config(const char* config_json) {
  if (config_json == nullptr || *config_json == '\0') return json::object();
  return json::parse(config_json);
}

json metrics_json(const std::vector<gateprune::GateMetrics>& metrics) {
  json rows = json::array();
  for (const auto& m : metrics) {
    rows.push_back(json{{"position", m.position},
                        {"gate", m.gate},
                        {"F", m.fidelity},
                        {"E", m.entanglement},
                        {"P", m.sensitivity},
                        {"GSI", m.gsi}});
  }
  return json{{"metrics", rows}};
}

}  // namespace

extern "C" {

const char* gp_version(void) { return "0.1.0"; }

const char* gp_last_error(void) { return g_last_error.c_str(); }

void gp_string_free(char* s) { delete[] s; }

gp_status gp_dataset_load_csv(const char* path, const char* label_column,
                              gp_dataset** out) {
  if (gp_status s = require(path && out, "path and out must be non-null"); s)
    return s;
  return guarded([&] {
    auto handle = std::make_unique<gp_dataset>();
    handle->value = gateprune::ingest_csv(
        path, label_column == nullptr ? "last" : label_column);
    *out = handle.release();
    return GP_OK;
  });
}

gp_status gp_dataset_dims(const gp_dataset* dataset, size_t* samples,
                          size_t* features) {
  if (gp_status s = require(dataset != nullptr, "dataset is null"); s) return s;
  if (samples) *samples = dataset->value.features.rows;
  if (features) *features = dataset->value.features.cols;
  return GP_OK;
}

void gp_dataset_free(gp_dataset* dataset) { delete dataset; }

gp_status gp_zz_map_build(size_t num_features, gp_entanglement entanglement,
                          int32_t reps, const double* x, size_t x_len,
                          gp_circuit** out) {
  if (gp_status s = require(out && x, "x and out must be non-null"); s)
    return s;
  return guarded([&] {
    gateprune::FeatureMapSpec spec;
    spec.num_features = static_cast<int>(num_features);
    spec.entanglement = entanglement == GP_ENTANGLE_FULL
                            ? gateprune::Entanglement::Full
                            : gateprune::Entanglement::Linear;
    spec.reps = reps;
    auto handle = std::make_unique<gp_circuit>();
    handle->value = gateprune::build_zz_map(spec, {x, x_len});
    *out = handle.release();
    return GP_OK;
  });
}

gp_status gp_circuit_gate_count(const gp_circuit* circuit, size_t* out) {
  if (gp_status s = require(circuit && out, "circuit and out must be non-null");
      s)
    return s;
  *out = circuit->value.size();
  return GP_OK;
}

gp_status gp_circuit_num_qubits(const gp_circuit* circuit, int32_t* out) {
  if (gp_status s = require(circuit && out, "circuit and out must be non-null");
      s)
    return s;
  *out = circuit->value.circuit.num_qubits;
  return GP_OK;
}

gp_status gp_circuit_prune(const gp_circuit* circuit, const uint8_t* keep,
                           size_t len, gp_circuit** out) {
  if (gp_status s =
          require(circuit && keep && out, "circuit, keep, out must be non-null");
      s)
    return s;
  return guarded([&] {
    gateprune::KeepMask mask(len);
    for (size_t i = 0; i < len; ++i) mask[i] = keep[i] != 0;
    auto handle = std::make_unique<gp_circuit>();
    handle->value = gateprune::prune(circuit->value, mask);
    *out = handle.release();
    return GP_OK;
  });
}

void gp_circuit_free(gp_circuit* circuit) { delete circuit; }

gp_status gp_gsi_exact(const gp_circuit* circuit, int32_t ent_qubit,
                       double delta, gp_metrics** out) {
  if (gp_status s = require(circuit && out, "circuit and out must be non-null");
      s)
    return s;
  return guarded([&] {
    gateprune::SensitivityConfig sens;
    if (delta > 0.0) sens.delta = delta;
    auto handle = std::make_unique<gp_metrics>();
    handle->value = gateprune::gsi_exact(circuit->value, ent_qubit, sens);
    *out = handle.release();
    return GP_OK;
  });
}

gp_status gp_gsi_hardware(const gp_circuit* circuit,
                          const gp_hardware_opts* opts, gp_metrics** out) {
  if (gp_status s = require(circuit && out, "circuit and out must be non-null");
      s)
    return s;
  return guarded([&] {
    gateprune::HardwareEstimatorConfig cfg;
    if (opts) {
      cfg.shots = opts->shots;
      cfg.tomo_qubit = opts->tomo_qubit;
      if (opts->delta > 0.0) cfg.delta = opts->delta;
      cfg.seed = opts->seed;
      if (opts->use_noise) {
        gateprune::NoiseSpec noise;
        noise.p1 = opts->p1;
        noise.p2 = opts->p2;
        noise.p_ro = opts->p_ro;
        noise.validate();
        cfg.noise = noise;
      }
    }
    auto handle = std::make_unique<gp_metrics>();
    handle->value = gateprune::gsi_hardware(circuit->value, cfg);
    *out = handle.release();
    return GP_OK;
  });
}

gp_status gp_metrics_count(const gp_metrics* metrics, size_t* out) {
  if (gp_status s = require(metrics && out, "metrics and out must be non-null");
      s)
    return s;
  *out = metrics->value.size();
  return GP_OK;
}

gp_status gp_metrics_row(const gp_metrics* metrics, size_t index,
                         gp_gate_metrics* out) {
  if (gp_status s = require(metrics && out, "metrics and out must be non-null");
      s)
    return s;
  if (index >= metrics->value.size()) {
    return fail(GP_ERR_INVALID_ARGUMENT, "metrics row index out of range");
  }
  const gateprune::GateMetrics& m = metrics->value[index];
  out->position = m.position;
  std::snprintf(out->gate, sizeof(out->gate), "%s", m.gate.c_str());
  out->fidelity = m.fidelity;
  out->entanglement = m.entanglement;
  out->sensitivity = m.sensitivity;
  out->gsi = m.gsi;
  return GP_OK;
}

gp_status gp_metrics_range(const gp_metrics* metrics, double* low,
                           double* high) {
  if (gp_status s = require(metrics && low && high,
                            "metrics, low, high must be non-null");
      s)
    return s;
  return guarded([&] {
    const auto [lo, hi] = gateprune::gsi_range(metrics->value);
    *low = lo;
    *high = hi;
    return GP_OK;
  });
}

gp_status gp_metrics_to_csv(const gp_metrics* metrics, char** out) {
  if (gp_status s = require(metrics && out, "metrics and out must be non-null");
      s)
    return s;
  return guarded([&] {
    *out = copy_string(gateprune::metrics_to_csv(metrics->value));
    return GP_OK;
  });
}

gp_status gp_metrics_to_json(const gp_metrics* metrics, char** out) {
  if (gp_status s = require(metrics && out, "metrics and out must be non-null");
      s)
    return s;
  return guarded([&] {
    *out = copy_string(metrics_json(metrics->value).dump(2) + "\n");
    return GP_OK;
  });
}

void gp_metrics_free(gp_metrics* metrics) { delete metrics; }

gp_status gp_gsi_from_dataset(const gp_dataset* dataset,
                              const char* config_json, gp_metrics** out) {
  if (gp_status s = require(dataset && out, "dataset and out must be non-null");
      s)
    return s;
  return guarded([&] {
    gateprune::ScanConfig cfg =
        gateprune::scan_config_from_json(parse_config(config_json));
    cfg.map.num_features = static_cast<int>(dataset->value.features.cols);
    cfg.validate();
    if (cfg.map.num_features > cfg.exact_qubit_cap) {
      throw gateprune::DataError("dense simulation capped at " +
                                 std::to_string(cfg.exact_qubit_cap) +
                                 " qubits");
    }
    const gateprune::DatasetSplit split = gateprune::split_dataset(
        dataset->value.features, dataset->value.labels, cfg.seed);
    std::vector<double> binding;
    if (cfg.bind_sample) {
      if (*cfg.bind_sample >= split.train_x.rows) {
        throw std::invalid_argument("bind_sample index out of range");
      }
      const auto row = split.train_x.row(*cfg.bind_sample);
      binding.assign(row.begin(), row.end());
    } else {
      binding = gateprune::column_mean(split.train_x);
    }
    const gateprune::BoundCircuit bound =
        gateprune::build_zz_map(cfg.map, binding);

    auto handle = std::make_unique<gp_metrics>();
    if (cfg.engine.kind == gateprune::EngineKind::Exact) {
      handle->value = gateprune::gsi_exact(
          bound, cfg.ent_qubit, gateprune::SensitivityConfig{cfg.delta});
    } else {
      gateprune::HardwareEstimatorConfig hw = cfg.engine.hardware;
      hw.delta = cfg.delta;
      hw.seed = gateprune::derive_seed(cfg.seed, 0x6721u);
      if (hw.tomo_qubit < 0 && cfg.ent_qubit >= 0) {
        hw.tomo_qubit = std::min(cfg.ent_qubit, cfg.map.num_features - 1);
      }
      handle->value = gateprune::gsi_hardware(bound, hw);
    }
    *out = handle.release();
    return GP_OK;
  });
}

gp_status gp_scan_run(const gp_dataset* dataset, const char* config_json,
                      gp_report** out) {
  if (gp_status s = require(dataset && out, "dataset and out must be non-null");
      s)
    return s;
  return guarded([&] {
    const gateprune::ScanConfig cfg =
        gateprune::scan_config_from_json(parse_config(config_json));
    auto handle = std::make_unique<gp_report>();
    handle->value = gateprune::run_scan(dataset->value, cfg);
    *out = handle.release();
    return GP_OK;
  });
}

gp_status gp_report_to_json(const gp_report* report, char** out) {
  if (gp_status s = require(report && out, "report and out must be non-null");
      s)
    return s;
  return guarded([&] {
    *out = copy_string(gateprune::report_to_json(report->value).dump(2) + "\n");
    return GP_OK;
  });
}

gp_status gp_report_csv(const gp_report* report, gp_report_csv_kind kind,
                        char** out) {
  if (gp_status s = require(report && out, "report and out must be non-null");
      s)
    return s;
  return guarded([&] {
    std::string csv;
    switch (kind) {
      case GP_CSV_GSI:
        csv = gateprune::report_csv_gsi(report->value);
        break;
      case GP_CSV_CANDIDATES:
        csv = gateprune::report_csv_candidates(report->value);
        break;
      case GP_CSV_RANKINGS:
        csv = gateprune::report_csv_rankings(report->value);
        break;
      default:
        throw std::invalid_argument("unknown csv kind");
    }
    *out = copy_string(csv);
    return GP_OK;
  });
}

void gp_report_free(gp_report* report) { delete report; }

gp_status gp_report_render(const char* report_json, char** out) {
  if (gp_status s =
          require(report_json && out, "report_json and out must be non-null");
      s)
    return s;
  return guarded([&] {
    json parsed;
    try {
      parsed = json::parse(report_json);
    } catch (const json::exception& e) {
      throw gateprune::DataError(std::string("report is not valid JSON: ") +
                                 e.what());
    }
    *out = copy_string(gateprune::render_report_table(parsed));
    return GP_OK;
  });
}

gp_status gp_bench_run(const char* config_json, char** csv_out) {
  if (gp_status s = require(csv_out != nullptr, "csv_out must be non-null"); s)
    return s;
  return guarded([&] {
    const json j = parse_config(config_json);
    const gateprune::ScanConfig cfg = gateprune::scan_config_from_json(j);

    std::vector<std::string> configs{"S1", "S2", "S3"};
    std::vector<int> qubits{4, 6, 8, 10};
    if (j.contains("bench")) {
      const json& b = j.at("bench");
      if (b.contains("configs")) {
        configs = b.at("configs").get<std::vector<std::string>>();
      }
      if (b.contains("qubits")) {
        qubits = b.at("qubits").get<std::vector<int>>();
      }
    }
    const auto rows =
        gateprune::bench_scalability(configs, qubits, cfg.engine,
                                     cfg.exact_qubit_cap, cfg.delta, cfg.seed);
    *csv_out = copy_string(gateprune::bench_csv(rows));
    return GP_OK;
  });
}

}  // extern "C"
