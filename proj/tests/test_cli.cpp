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

// Black-box checks of the installed CLI binary: exit codes, produced files,
// and idempotence.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli() { return GATEPRUNE_CLI_PATH; }
std::string fixture(const std::string& name) {
  return std::string(GATEPRUNE_DATA_DIR) + "/" + name;
}

int run(const std::string& args) {
  const std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Sandbox {
  fs::path dir;
  explicit Sandbox(const std::string& tag) {
    dir = fs::temp_directory_path() / ("gateprune_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string config(const json& extra) const {
    json cfg{{"dataset", fixture("xor.csv")},
             {"out_dir", (dir / "out").string()},
             {"svm", {{"C", 5000}, {"num_steps", 100}}},
             {"seed", 21},
             {"serial", true},
             {"timer", "deterministic"}};
    cfg.update(extra);
    const fs::path path = dir / "config.json";
    std::ofstream(path) << cfg.dump(2);
    return path.string();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: usage errors exit with code 1") {
  CHECK(run("definitely-not-a-command") == 1);
  CHECK(run("scan") == 1);  // --config is required
  Sandbox box("badcfg");
  std::ofstream(box.dir / "broken.json") << "{ not json";
  CHECK(run("scan --config " + (box.dir / "broken.json").string()) == 1);
}

TEST_CASE("cli: missing dataset exits 2 and leaves no partial files") {
  Sandbox box("missing");
  const std::string cfg = box.config({{"dataset", "/nope/gone.csv"}});
  CHECK(run("gsi --config " + cfg) == 2);
  CHECK_FALSE(fs::exists(box.dir / "out" / "gsi.csv"));
  CHECK_FALSE(fs::exists(box.dir / "out" / "gsi.json"));
}

TEST_CASE("cli: gsi writes csv and json into the output directory") {
  Sandbox box("gsi");
  const std::string cfg = box.config(json::object());
  REQUIRE(run("gsi --config " + cfg) == 0);
  const std::string csv = slurp(box.dir / "out" / "gsi.csv");
  CHECK(csv.rfind("position,gate,F,E,P,GSI\n", 0) == 0);
  // xor.csv has 2 features -> 7 gates.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  const json js = json::parse(slurp(box.dir / "out" / "gsi.json"));
  CHECK(js["metrics"].size() == 7);

  // Identical run, byte-identical artifact.
  const std::string before = csv;
  REQUIRE(run("gsi --config " + cfg) == 0);
  CHECK(slurp(box.dir / "out" / "gsi.csv") == before);
}

TEST_CASE("cli: hardware-engine gsi is byte-identical across runs") {
  Sandbox box("gsihw");
  const std::string cfg = box.config(json::object());
  const std::string flags = " --engine hardware --shots 512 --seed 5";
  REQUIRE(run("gsi --config " + cfg + flags) == 0);
  const std::string first = slurp(box.dir / "out" / "gsi.csv");
  REQUIRE(run("gsi --config " + cfg + flags) == 0);
  CHECK(slurp(box.dir / "out" / "gsi.csv") == first);
  CHECK(std::count(first.begin(), first.end(), '\n') == 8);
}

TEST_CASE("cli: scan writes the report plus three csv tables; report renders") {
  Sandbox box("scan");
  const std::string cfg = box.config(json::object());
  REQUIRE(run("scan --config " + cfg) == 0);
  for (const char* name :
       {"report.json", "gsi.csv", "candidates.csv", "rankings.csv"}) {
    CHECK(fs::exists(box.dir / "out" / name));
  }
  const json report = json::parse(slurp(box.dir / "out" / "report.json"));
  CHECK(report["candidates"].size() >= 1);

  CHECK(run("report " + (box.dir / "out" / "report.json").string()) == 0);
  CHECK(run("report --config " + cfg) == 0);  // resolves out_dir/report.json
  CHECK(run("report") == 1);
  CHECK(run("report /nope/missing.json") == 2);
  std::ofstream(box.dir / "garbage.json") << "{\"not\": \"a report\"}";
  CHECK(run("report " + (box.dir / "garbage.json").string()) == 2);
}

TEST_CASE("cli: flags override the config file") {
  Sandbox box("flags");
  const std::string cfg = box.config(json::object());
  const std::string alt = (box.dir / "alt").string();
  REQUIRE(run("gsi --config " + cfg + " --out " + alt + " --seed 99") == 0);
  CHECK(fs::exists(fs::path(alt) / "gsi.csv"));
  CHECK_FALSE(fs::exists(box.dir / "out" / "gsi.csv"));
}

TEST_CASE("cli: bench writes the scalability table") {
  Sandbox box("bench");
  const std::string cfg = box.config(
      {{"bench", {{"configs", {"S1"}}, {"qubits", {3, 4}}}}});
  REQUIRE(run("bench --config " + cfg) == 0);
  const std::string csv = slurp(box.dir / "out" / "bench.csv");
  CHECK(csv.rfind("config,qubits,gates,time_s\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
