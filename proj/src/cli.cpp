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

#include "tumornet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "tumornet/config.hpp"
#include "tumornet/error.hpp"
#include "tumornet/format.hpp"
#include "tumornet/metrics.hpp"
#include "tumornet/plot.hpp"
#include "tumornet/report.hpp"
#include "tumornet/sweep.hpp"
#include "tumornet/tumor_model.hpp"

namespace fs = std::filesystem;

namespace tumornet {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kBelowThreshold:
    case ErrorCode::kInvalidSpec:
    case ErrorCode::kInvalidInput:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitRuntime;
  }
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create directory '" + dir.string() + "': " +
                    ec.message());
  }
}

std::size_t default_workers() {
  if (const char* env = std::getenv("TUMORNET_WORKERS")) {
    const auto v = parse_uint(env);
    if (!v || *v == 0) {
      throw UsageError("TUMORNET_WORKERS must be a positive integer, got '" +
                       std::string(env) + "'");
    }
    return static_cast<std::size_t>(*v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct RunOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> steps;
};

int do_run(const RunOptions& opt, std::ostream& out) {
  ParsedConfig parsed = parse_config(read_text_file(opt.config));
  ModelConfig& config = parsed.config;
  auto& defaulted = parsed.defaulted;
  const auto drop_default = [&defaulted](std::string_view key) {
    defaulted.erase(std::remove(defaulted.begin(), defaulted.end(), key),
                    defaulted.end());
  };
  if (opt.seed) {
    config.seed = *opt.seed;
    drop_default("seed");
  }
  if (opt.steps) {
    config.max_steps = *opt.steps;
    drop_default("max_steps");
  }

  const auto start = std::chrono::steady_clock::now();
  TumorModel model(config);
  const RunResult result = run(model, config.max_steps);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  RunSummary summary;
  summary.seed = config.seed;
  summary.defaults_applied = defaulted;
  summary.termination = result.reason;
  summary.final_record = result.series.final();
  if (result.series.size() >= 2 && result.series.initial().volume_ratio > 0) {
    summary.tci = tci_classify(result.series);
  }
  summary.degree_histogram = degree_histogram(model.graph());
  summary.wall_clock_seconds = elapsed;

  const fs::path dir(opt.out);
  ensure_directory(dir);
  write_text_file(dir / "run.csv", run_csv(result.series));
  write_text_file(dir / "summary.json", summary_json(summary) + "\n");
  out << "run: " << result.series.size() - 1 << " steps, termination "
      << to_string(result.reason) << ", volume ratio "
      << format_fixed(summary.final_record.volume_ratio) << " -> "
      << (dir / "run.csv").string() << "\n";
  return kExitOk;
}

struct SweepOptions {
  std::string preset;
  std::string spec;
  std::optional<std::size_t> workers;
  std::optional<std::size_t> seeds;
  bool keep_runs = false;
  std::string out;
};

int do_sweep(const SweepOptions& opt, std::ostream& out) {
  SweepSpec spec;
  if (!opt.preset.empty()) {
    if (opt.preset != "fig4") {
      throw UsageError("unknown preset '" + opt.preset + "' (known: fig4)");
    }
    spec = fig4_preset();
  } else if (!opt.spec.empty()) {
    spec = parse_sweep_spec(read_text_file(opt.spec));
  } else {
    throw UsageError("sweep needs --preset or --spec");
  }
  if (opt.seeds) {
    if (*opt.seeds == 0) throw UsageError("--seeds must be positive");
    spec.seeds_per_cell = *opt.seeds;
  }
  const std::size_t workers = opt.workers ? *opt.workers : default_workers();
  if (workers == 0) throw UsageError("--workers must be positive");

  const fs::path dir(opt.out);
  ensure_directory(dir);
  SeriesSink sink;
  if (opt.keep_runs) {
    ensure_directory(dir / "runs");
    sink = [&dir](const PlannedRun& run, const TimeSeries& series) {
      write_text_file(
          dir / "runs" / ("run_" + std::to_string(run.run_index) + ".csv"),
          run_csv(series));
    };
  }
  const SweepResult result = run_sweep(spec, workers, sink);
  write_text_file(dir / "summary.csv", sweep_summary_csv(result));
  write_text_file(dir / "runs.csv", sweep_runs_csv(result));
  out << "sweep: " << result.cells.size() << " cells, " << result.runs.size()
      << " runs -> " << (dir / "summary.csv").string() << "\n";
  return kExitOk;
}

int do_analyze(const std::string& runs_dir, const std::string& out_path,
               std::ostream& out) {
  const fs::path root(runs_dir);
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kIo, "'" + runs_dir + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") {
      continue;
    }
    // Only files carrying the run schema; sweep tables may sit alongside.
    const std::string text = read_text_file(entry.path());
    if (text.rfind(std::string(kRunCsvHeader) + "\n", 0) == 0) {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw Error(ErrorCode::kInvalidInput,
                "no run CSV files under '" + runs_dir + "'");
  }
  std::sort(files.begin(), files.end());

  std::string table =
      "run,records,initial_volume_ratio,final_volume_ratio,final_n_nodes,"
      "final_metastatic,peak_metastatic,tci\n";
  for (const auto& path : files) {
    const TimeSeries series = parse_run_csv(read_text_file(path));
    if (series.empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "'" + path.string() + "' has no data rows");
    }
    std::size_t peak = 0;
    for (const auto& r : series.records) {
      peak = std::max(peak, r.count_metastatic);
    }
    std::string tci = "none";
    if (series.size() >= 2 && series.initial().volume_ratio > 0) {
      tci = std::string(to_string(tci_classify(series)));
    }
    table += fs::relative(path, root).generic_string() + ',' +
             std::to_string(series.size()) + ',' +
             format_fixed(series.initial().volume_ratio) + ',' +
             format_fixed(series.final().volume_ratio) + ',' +
             std::to_string(series.final().n_nodes) + ',' +
             std::to_string(series.final().count_metastatic) + ',' +
             std::to_string(peak) + ',' + tci + '\n';
  }
  write_text_file(out_path, table);
  out << "analyze: " << files.size() << " runs -> " << out_path << "\n";
  return kExitOk;
}

int do_plot(const std::string& input, const std::string& kind_name,
            const std::string& out_path, std::ostream& out) {
  const auto kind = parse_plot_kind(kind_name);
  if (!kind) {
    throw UsageError("unknown plot kind '" + kind_name +
                     "' (expected timeseries or sweep)");
  }
  write_text_file(out_path, plot_svg(read_text_file(input), *kind));
  out << "plot: " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Agent-based tumor growth simulator on Erdos-Renyi graphs",
               "tumornet"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run_cmd = app.add_subcommand("run", "Simulate one configuration");
  run_cmd->add_option("--config", run_opt.config, "key=value config file")
      ->required();
  run_cmd->add_option("--out", run_opt.out, "Output directory")->required();
  run_cmd->add_option("--seed", run_opt.seed, "Override the config seed");
  run_cmd->add_option("--steps", run_opt.steps, "Override max_steps");

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep");
  auto* preset = sweep_cmd->add_option("--preset", sweep_opt.preset,
                                       "Built-in sweep (fig4)");
  auto* spec = sweep_cmd->add_option("--spec", sweep_opt.spec,
                                     "Sweep spec file");
  preset->excludes(spec);
  sweep_cmd->add_option("--workers", sweep_opt.workers,
                        "Worker threads (default: TUMORNET_WORKERS or cores)");
  sweep_cmd->add_option("--seeds", sweep_opt.seeds,
                        "Override seeds per cell");
  sweep_cmd->add_flag("--keep-runs", sweep_opt.keep_runs,
                      "Keep per-run CSVs under <out>/runs");
  sweep_cmd->add_option("--out", sweep_opt.out, "Output directory")
      ->required();

  std::string runs_dir;
  std::string analyze_out;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Summarize a directory of run CSVs");
  analyze_cmd->add_option("--runs", runs_dir, "Directory of run CSVs")
      ->required();
  analyze_cmd->add_option("--out", analyze_out, "Output CSV")->required();

  std::string plot_input;
  std::string plot_kind;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Render a CSV as SVG");
  plot_cmd->add_option("--input", plot_input, "Run or sweep summary CSV")
      ->required();
  plot_cmd->add_option("--kind", plot_kind, "timeseries or sweep")
      ->required();
  plot_cmd->add_option("--out", plot_out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*run_cmd) return do_run(run_opt, out);
    if (*sweep_cmd) return do_sweep(sweep_opt, out);
    if (*analyze_cmd) return do_analyze(runs_dir, analyze_out, out);
    if (*plot_cmd) return do_plot(plot_input, plot_kind, plot_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace tumornet
