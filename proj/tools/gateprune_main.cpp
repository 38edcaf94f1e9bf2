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

// gateprune CLI. Loads a JSON config, applies flag overrides, drives the
// libgateprune C API, and owns all file placement. Output files are written
// atomically (temp file + rename) into the configured output directory.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 internal
// invariant violation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gateprune/gateprune.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(gp_status status) {
  switch (status) {
    case GP_OK: return kExitOk;
    case GP_ERR_INVALID_ARGUMENT: return kExitUsage;
    case GP_ERR_DATA: return kExitData;
    default: return kExitInternal;
  }
}

void check(gp_status status) {
  if (status != GP_OK) {
    throw CliError{exit_code_for(status), gp_last_error()};
  }
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  gp_string_free(s);
  return out;
}

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> engine;
  std::optional<std::uint64_t> shots;
  std::optional<double> step;
  bool serial = false;
  std::optional<std::string> out_dir;
};

json load_config(const std::string& path, const Overrides& ov) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot open config '" + path + "'"};
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw CliError{kExitUsage,
                   "config '" + path + "' is not valid JSON: " + e.what()};
  }
  if (!cfg.is_object()) {
    throw CliError{kExitUsage, "config root must be a JSON object"};
  }
  // Flags win over file values.
  if (ov.seed) cfg["seed"] = *ov.seed;
  if (ov.engine) cfg["engine"]["kind"] = *ov.engine;
  if (ov.shots) cfg["engine"]["shots"] = *ov.shots;
  if (ov.step) cfg["threshold_step"] = *ov.step;
  if (ov.serial) cfg["serial"] = true;
  if (ov.out_dir) cfg["out_dir"] = *ov.out_dir;
  return cfg;
}

std::string dataset_path(const json& cfg) {
  if (!cfg.contains("dataset")) {
    throw CliError{kExitUsage, "config has no 'dataset' path"};
  }
  const std::string path = cfg.at("dataset").get<std::string>();
  if (!fs::exists(path)) {
    throw CliError{kExitData, "dataset '" + path + "' does not exist"};
  }
  return path;
}

fs::path output_dir(const json& cfg) {
  const std::string dir = cfg.value("out_dir", "out");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw CliError{kExitData,
                   "cannot create output directory '" + dir + "': " + ec.message()};
  }
  return dir;
}

// Temp-then-rename so an interrupted run never leaves a torn file.
void write_atomic(const fs::path& target, const std::string& content) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw CliError{kExitData, "cannot write '" + tmp.string() + "'"};
    }
    out << content;
    if (!out.flush()) {
      throw CliError{kExitData, "short write to '" + tmp.string() + "'"};
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw CliError{kExitData, "cannot finalize '" + target.string() +
                                  "': " + ec.message()};
  }
}

using DatasetPtr = std::unique_ptr<gp_dataset, decltype(&gp_dataset_free)>;

DatasetPtr load_dataset(const json& cfg) {
  const std::string path = dataset_path(cfg);
  const std::string label = cfg.value("label_column", "last");
  gp_dataset* raw = nullptr;
  check(gp_dataset_load_csv(path.c_str(), label.c_str(), &raw));
  return DatasetPtr(raw, &gp_dataset_free);
}

int cmd_gsi(const json& cfg) {
  DatasetPtr dataset = load_dataset(cfg);
  const fs::path dir = output_dir(cfg);
  const std::string cfg_str = cfg.dump();

  gp_metrics* metrics = nullptr;
  check(gp_gsi_from_dataset(dataset.get(), cfg_str.c_str(), &metrics));
  std::unique_ptr<gp_metrics, decltype(&gp_metrics_free)> guard(
      metrics, &gp_metrics_free);

  char* csv = nullptr;
  check(gp_metrics_to_csv(metrics, &csv));
  write_atomic(dir / "gsi.csv", take_string(csv));

  char* js = nullptr;
  check(gp_metrics_to_json(metrics, &js));
  write_atomic(dir / "gsi.json", take_string(js));

  size_t rows = 0;
  check(gp_metrics_count(metrics, &rows));
  std::cout << "wrote " << (dir / "gsi.csv").string() << " and "
            << (dir / "gsi.json").string() << " (" << rows << " gates)\n";
  return kExitOk;
}

int cmd_scan(const json& cfg) {
  DatasetPtr dataset = load_dataset(cfg);
  const fs::path dir = output_dir(cfg);
  const std::string cfg_str = cfg.dump();

  gp_report* report = nullptr;
  check(gp_scan_run(dataset.get(), cfg_str.c_str(), &report));
  std::unique_ptr<gp_report, decltype(&gp_report_free)> guard(report,
                                                              &gp_report_free);

  char* js = nullptr;
  check(gp_report_to_json(report, &js));
  write_atomic(dir / "report.json", take_string(js));

  const std::pair<gp_report_csv_kind, const char*> tables[] = {
      {GP_CSV_GSI, "gsi.csv"},
      {GP_CSV_CANDIDATES, "candidates.csv"},
      {GP_CSV_RANKINGS, "rankings.csv"}};
  for (const auto& [kind, name] : tables) {
    char* csv = nullptr;
    check(gp_report_csv(report, kind, &csv));
    write_atomic(dir / name, take_string(csv));
  }
  std::cout << "wrote " << (dir / "report.json").string()
            << " plus gsi.csv, candidates.csv, rankings.csv\n";
  return kExitOk;
}

int cmd_bench(const json& cfg) {
  const fs::path dir = output_dir(cfg);
  char* csv = nullptr;
  check(gp_bench_run(cfg.dump().c_str(), &csv));
  write_atomic(dir / "bench.csv", take_string(csv));
  std::cout << "wrote " << (dir / "bench.csv").string() << "\n";
  return kExitOk;
}

int cmd_report(const std::string& report_path) {
  std::ifstream in(report_path);
  if (!in) {
    throw CliError{kExitData, "cannot open report '" + report_path + "'"};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  char* table = nullptr;
  check(gp_report_render(buffer.str().c_str(), &table));
  std::cout << take_string(table);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GSI-based feature-map pruning: score gates, scan thresholds, "
               "rank pruned models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string report_path;
  Overrides ov;

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* opt = cmd->add_option("--config", config_path, "JSON config file");
    if (config_required) opt->required();
    cmd->add_option("--seed", ov.seed, "override the master seed");
    cmd->add_option("--engine", ov.engine, "exact | hardware")
        ->check(CLI::IsMember({"exact", "hardware"}));
    cmd->add_option("--shots", ov.shots, "hardware engine shots");
    cmd->add_option("--step", ov.step, "threshold step size");
    cmd->add_flag("--serial", ov.serial, "force single-threaded execution");
    cmd->add_option("--out", ov.out_dir, "output directory");
  };

  CLI::App* gsi = app.add_subcommand("gsi", "compute per-gate metrics");
  add_common(gsi, true);
  CLI::App* scan = app.add_subcommand("scan", "run the full threshold scan");
  add_common(scan, true);
  CLI::App* bench = app.add_subcommand("bench", "GSI runtime scalability");
  add_common(bench, true);
  CLI::App* report =
      app.add_subcommand("report", "print a summary table of a report.json");
  report->add_option("report_json", report_path, "path to report.json");
  report->add_option("--config", config_path,
                     "config whose out_dir holds report.json");
  report->add_option("--out", ov.out_dir, "output directory override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (report->parsed()) {
      if (report_path.empty()) {
        if (config_path.empty()) {
          throw CliError{kExitUsage,
                         "report needs a report.json path or --config"};
        }
        const json cfg = load_config(config_path, ov);
        report_path =
            (fs::path(cfg.value("out_dir", "out")) / "report.json").string();
      }
      return cmd_report(report_path);
    }
    const json cfg = load_config(config_path, ov);
    if (gsi->parsed()) return cmd_gsi(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
  } catch (const CliError& e) {
    std::cerr << "gateprune: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "gateprune: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
