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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tumornet/engine.hpp"
#include "tumornet/metrics.hpp"
#include "tumornet/tumor_model.hpp"

namespace tumornet {

struct SweepSpec {
  std::vector<std::size_t> csc_counts;
  std::vector<double> angiogenesis_values;
  std::vector<double> recovery_values;
  std::vector<double> quiescence_values;
  std::vector<int> k_values;
  std::size_t seeds_per_cell = 1;
  std::uint64_t base_seed = 0;
  std::uint64_t max_steps = 500;
  bool allow_below_threshold = false;

  // Product of dimension sizes times seeds_per_cell.
  std::size_t total_runs() const;
};

/// Angiogenesis 0.1..0.9 against 60, 360, 650, 1000 and 1200 initial stem
/// cells; recovery low, quiescence medium, K = 8, 40 steps.
SweepSpec fig4_preset(std::size_t seeds_per_cell = 30);

struct PlannedRun {
  std::size_t run_index = 0;
  std::size_t cell_index = 0;
  std::size_t seed_index = 0;
  ModelConfig config;
};

/// Cartesian product with csc_counts outermost, then K, angiogenesis,
/// recovery, quiescence, and seeds innermost. Run i gets seed base_seed + i.
std::vector<PlannedRun> expand(const SweepSpec& spec);

struct RunOutcome {
  std::size_t run_index = 0;
  std::size_t cell_index = 0;
  std::uint64_t seed = 0;
  StepRecord final_record;
  TciClass tci = TciClass::kStabilization;
  Termination reason = Termination::kMaxSteps;

  bool operator==(const RunOutcome&) const = default;
};

struct SampleStats {
  double mean = 0.0;
  // Sample (n - 1) standard deviation; 0 for a single value.
  double std = 0.0;
};

SampleStats summarize(std::span<const double> values);

struct CellSummary {
  std::size_t cell_index = 0;
  std::size_t csc_count = 0;
  int avg_degree = 0;
  ControlFactors factors;
  std::size_t runs = 0;
  SampleStats volume_ratio;
  SampleStats metastatic_fraction;
  SampleStats metastatic_count;
  std::size_t progression = 0;
  std::size_t rejection = 0;
  std::size_t stabilization = 0;
};

struct SweepResult {
  std::vector<RunOutcome> runs;   // ascending run_index
  std::vector<CellSummary> cells;  // ascending cell_index
};

/// Per-cell mean/std and TCI tallies. Throws kIncompleteCell when a planned
/// run has no outcome.
std::vector<CellSummary> aggregate(std::span<const PlannedRun> plan,
                                   std::span<const RunOutcome> outcomes);

// Called from worker threads once per finished run.
using SeriesSink =
    std::function<void(const PlannedRun&, const TimeSeries&)>;

// Runs one planned configuration to completion.
RunOutcome execute_run(const PlannedRun& run, TimeSeries* series_out = nullptr);

/// Executes every expanded run on `workers` threads. Output is independent of
/// the worker count. A failing run aborts the sweep with kRunFailed naming its
/// config id and seed.
SweepResult run_sweep(const SweepSpec& spec, std::size_t workers,
                      const SeriesSink& sink = {});

// Canonical CSV renderings.
std::string sweep_summary_csv(const SweepResult& result);
std::string sweep_runs_csv(const SweepResult& result);

inline constexpr std::string_view kSweepSummaryHeader =
    "cell,csc_count,K,angiogenesis,recovery,quiescence,runs,"
    "mean_volume_ratio,std_volume_ratio,mean_metastatic_fraction,"
    "std_metastatic_fraction,mean_metastatic,std_metastatic,"
    "progression,rejection,stabilization";

inline constexpr std::string_view kSweepRunsHeader =
    "run,cell,seed,step,n_nodes,n_edges,normal,quiescent,metastatic,dead,"
    "volume_ratio,tci,termination";

}  // namespace tumornet
