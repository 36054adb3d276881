// Copyright 2026 The tumornet Authors
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tumornet/cli.hpp"
#include "tumornet/report.hpp"
#include "tumornet/sweep.hpp"

using namespace tumornet;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tumornet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Fresh scratch directory per test case.
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tumornet_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::string kGolden = TUMORNET_GOLDEN_DIR;

constexpr std::string_view kSpec =
    "csc_counts=40,60\n"
    "K=8\n"
    "angiogenesis=0.2,0.7\n"
    "recovery=low\n"
    "quiescence=medium\n"
    "seeds_per_cell=3\n"
    "max_steps=10\n";

}  // namespace

TEST_CASE("run writes the CSV and summary and matches the golden file") {
  const fs::path dir = scratch("run");
  const auto r = cli({"run", "--config", kGolden + "/small.conf", "--out",
                      (dir / "out").string()});
  REQUIRE(r.code == kExitOk);
  const std::string csv = read_text_file(dir / "out" / "run.csv");
  CHECK(csv == read_text_file(kGolden + "/small_run.csv"));

  const auto summary =
      nlohmann::json::parse(read_text_file(dir / "out" / "summary.json"));
  const TimeSeries series = parse_run_csv(csv);
  CHECK(summary["seed"] == 3);
  CHECK(summary["steps"] == series.final().step);
  CHECK(summary["n_nodes"] == series.final().n_nodes);
  CHECK(summary["termination"] == "max_steps");
  CHECK(summary["defaults_applied"].size() > 0);
}

TEST_CASE("run overrides seed and steps") {
  const fs::path dir = scratch("override");
  const auto r = cli({"run", "--config", kGolden + "/small.conf", "--out",
                      dir.string(), "--seed", "11", "--steps", "4"});
  REQUIRE(r.code == kExitOk);
  const auto series = parse_run_csv(read_text_file(dir / "run.csv"));
  CHECK(series.size() == 5);
  const auto summary = nlohmann::json::parse(read_text_file(dir / "summary.json"));
  CHECK(summary["seed"] == 11);
  for (const auto& key : summary["defaults_applied"]) {
    CHECK(key != "seed");
    CHECK(key != "max_steps");
  }
}

TEST_CASE("usage and runtime errors map to exit codes") {
  const fs::path dir = scratch("errors");
  CHECK(cli({"run", "--config", "x", "--out", "y", "--bogus"}).code == kExitUsage);
  CHECK(cli({"run", "--out", "y"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);

  write_text_file(dir / "below.conf", "n_initial=100\nK=4\np=0.001\n");
  const auto below = cli({"run", "--config", (dir / "below.conf").string(),
                          "--out", (dir / "o").string()});
  CHECK(below.code == kExitUsage);
  CHECK(below.err.find("below") != std::string::npos);

  write_text_file(dir / "bad.conf", "n_initial=100\nK=4\nfoo=1\n");
  CHECK(cli({"run", "--config", (dir / "bad.conf").string(), "--out",
             (dir / "o").string()})
            .code == kExitUsage);

  const auto missing = cli({"run", "--config", (dir / "nope.conf").string(),
                            "--out", (dir / "o").string()});
  CHECK(missing.code == kExitRuntime);
  CHECK(missing.err.find("nope.conf") != std::string::npos);

  CHECK(cli({"plot", "--input", "a", "--kind", "pie", "--out", "b"}).code ==
        kExitUsage);
  CHECK(cli({"sweep", "--preset", "fig9", "--out", dir.string()}).code ==
        kExitUsage);
}

TEST_CASE("sweep output is identical for one and three workers") {
  const fs::path dir = scratch("sweep");
  write_text_file(dir / "spec.txt", kSpec);
  const auto a = cli({"sweep", "--spec", (dir / "spec.txt").string(),
                      "--workers", "1", "--keep-runs", "--out",
                      (dir / "a").string()});
  const auto b = cli({"sweep", "--spec", (dir / "spec.txt").string(),
                      "--workers", "3", "--keep-runs", "--out",
                      (dir / "b").string()});
  REQUIRE(a.code == kExitOk);
  REQUIRE(b.code == kExitOk);
  for (const auto* name : {"summary.csv", "runs.csv", "runs/run_0.csv",
                           "runs/run_11.csv"}) {
    CHECK(read_text_file(dir / "a" / name) == read_text_file(dir / "b" / name));
  }
  CHECK(parse_csv(read_text_file(dir / "a" / "summary.csv")).rows.size() == 4);

  SUBCASE("analyze summarizes the kept runs") {
    const auto r = cli({"analyze", "--runs", (dir / "a").string(), "--out",
                        (dir / "analysis.csv").string()});
    REQUIRE(r.code == kExitOk);
    const auto table = parse_csv(read_text_file(dir / "analysis.csv"));
    CHECK(table.rows.size() == 12);
    CHECK(table.rows[0][0] == "runs/run_0.csv");
  }
  SUBCASE("plot renders the sweep summary") {
    const auto r = cli({"plot", "--input", (dir / "a" / "summary.csv").string(),
                        "--kind", "sweep", "--out", (dir / "s.svg").string()});
    REQUIRE(r.code == kExitOk);
    CHECK(read_text_file(dir / "s.svg").find("<svg") != std::string::npos);
  }
}

TEST_CASE("TUMORNET_WORKERS sets the default worker count") {
  const fs::path dir = scratch("env");
  write_text_file(dir / "spec.txt", kSpec);
  const std::string spec = (dir / "spec.txt").string();
  ::setenv("TUMORNET_WORKERS", "0", 1);
  CHECK(cli({"sweep", "--spec", spec, "--out", (dir / "z").string()}).code ==
        kExitUsage);
  ::setenv("TUMORNET_WORKERS", "2", 1);
  CHECK(cli({"sweep", "--spec", spec, "--out", (dir / "two").string()}).code ==
        kExitOk);
  ::unsetenv("TUMORNET_WORKERS");
  CHECK(cli({"sweep", "--spec", spec, "--workers", "1", "--out",
             (dir / "one").string()})
            .code == kExitOk);
  CHECK(read_text_file(dir / "two" / "summary.csv") ==
        read_text_file(dir / "one" / "summary.csv"));
}

TEST_CASE("plot renders a run CSV") {
  const fs::path dir = scratch("plot");
  const auto r = cli({"plot", "--input", kGolden + "/small_run.csv", "--kind",
                      "timeseries", "--out", (dir / "t.svg").string()});
  REQUIRE(r.code == kExitOk);
  CHECK(read_text_file(dir / "t.svg").find("<polyline") != std::string::npos);
}
