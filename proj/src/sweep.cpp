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

#include "tumornet/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "tumornet/error.hpp"
#include "tumornet/format.hpp"

namespace tumornet {

std::size_t SweepSpec::total_runs() const {
  return csc_counts.size() * k_values.size() * angiogenesis_values.size() *
         recovery_values.size() * quiescence_values.size() * seeds_per_cell;
}

SweepSpec fig4_preset(std::size_t seeds_per_cell) {
  SweepSpec spec;
  spec.csc_counts = {60, 360, 650, 1000, 1200};
  for (int i = 1; i <= 9; ++i) spec.angiogenesis_values.push_back(i / 10.0);
  spec.recovery_values = {factor_level(Factor::kRecovery, Level::kLow)};
  spec.quiescence_values = {factor_level(Factor::kQuiescence, Level::kMedium)};
  spec.k_values = {8};
  spec.seeds_per_cell = seeds_per_cell;
  spec.base_seed = 0;
  spec.max_steps = 40;
  return spec;
}

namespace {

void require_non_empty(bool empty, const char* name) {
  if (empty) {
    throw Error(ErrorCode::kInvalidSpec,
                std::string("sweep dimension '") + name + "' is empty");
  }
}

}  // namespace

std::vector<PlannedRun> expand(const SweepSpec& spec) {
  require_non_empty(spec.csc_counts.empty(), "csc_counts");
  require_non_empty(spec.k_values.empty(), "K");
  require_non_empty(spec.angiogenesis_values.empty(), "angiogenesis");
  require_non_empty(spec.recovery_values.empty(), "recovery");
  require_non_empty(spec.quiescence_values.empty(), "quiescence");
  if (spec.seeds_per_cell == 0) {
    throw Error(ErrorCode::kInvalidSpec, "seeds_per_cell must be positive");
  }

  std::vector<PlannedRun> plan;
  plan.reserve(spec.total_runs());
  std::size_t cell = 0;
  for (const auto count : spec.csc_counts) {
    for (const int k : spec.k_values) {
      for (const double a : spec.angiogenesis_values) {
        for (const double r : spec.recovery_values) {
          for (const double q : spec.quiescence_values) {
            for (std::size_t s = 0; s < spec.seeds_per_cell; ++s) {
              PlannedRun run;
              run.run_index = plan.size();
              run.cell_index = cell;
              run.seed_index = s;
              run.config.n_initial = count;
              run.config.avg_degree = k;
              run.config.factors = ControlFactors{a, r, q};
              run.config.max_steps = spec.max_steps;
              run.config.seed = spec.base_seed + run.run_index;
              run.config.allow_below_threshold = spec.allow_below_threshold;
              plan.push_back(std::move(run));
            }
            ++cell;
          }
        }
      }
    }
  }
  return plan;
}

SampleStats summarize(std::span<const double> values) {
  SampleStats stats;
  if (values.empty()) return stats;
  double sum = 0.0;
  for (const double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - stats.mean) * (v - stats.mean);
    stats.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return stats;
}

std::vector<CellSummary> aggregate(std::span<const PlannedRun> plan,
                                   std::span<const RunOutcome> outcomes) {
  std::vector<const RunOutcome*> by_run(plan.size(), nullptr);
  for (const auto& o : outcomes) {
    if (o.run_index < by_run.size()) by_run[o.run_index] = &o;
  }

  std::vector<CellSummary> cells;
  std::size_t i = 0;
  while (i < plan.size()) {
    const std::size_t cell_index = plan[i].cell_index;
    const ModelConfig& config = plan[i].config;
    std::vector<double> ratios;
    std::vector<double> fractions;
    std::vector<double> metastatic;
    CellSummary summary;
    summary.cell_index = cell_index;
    summary.csc_count = config.n_initial;
    summary.avg_degree = config.avg_degree;
    summary.factors = config.factors;
    for (; i < plan.size() && plan[i].cell_index == cell_index; ++i) {
      const RunOutcome* o = by_run[plan[i].run_index];
      if (o == nullptr) {
        throw Error(ErrorCode::kIncompleteCell,
                    "cell " + std::to_string(cell_index) +
                        " is missing run " +
                        std::to_string(plan[i].run_index) + " (seed " +
                        std::to_string(plan[i].config.seed) + ")");
      }
      const StepRecord& f = o->final_record;
      ratios.push_back(f.volume_ratio);
      fractions.push_back(f.n_nodes == 0
                              ? 0.0
                              : static_cast<double>(f.count_metastatic) /
                                    static_cast<double>(f.n_nodes));
      metastatic.push_back(static_cast<double>(f.count_metastatic));
      switch (o->tci) {
        case TciClass::kProgression:
          ++summary.progression;
          break;
        case TciClass::kRejection:
          ++summary.rejection;
          break;
        case TciClass::kStabilization:
          ++summary.stabilization;
          break;
      }
    }
    summary.runs = ratios.size();
    summary.volume_ratio = summarize(ratios);
    summary.metastatic_fraction = summarize(fractions);
    summary.metastatic_count = summarize(metastatic);
    cells.push_back(summary);
  }
  return cells;
}

RunOutcome execute_run(const PlannedRun& run, TimeSeries* series_out) {
  TumorModel model(run.config);
  RunResult result = tumornet::run(model, run.config.max_steps);
  RunOutcome outcome;
  outcome.run_index = run.run_index;
  outcome.cell_index = run.cell_index;
  outcome.seed = run.config.seed;
  outcome.final_record = result.series.final();
  outcome.tci = tci_classify(result.series);
  outcome.reason = result.reason;
  if (series_out != nullptr) *series_out = std::move(result.series);
  return outcome;
}

SweepResult run_sweep(const SweepSpec& spec, std::size_t workers,
                      const SeriesSink& sink) {
  if (workers == 0) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be at least 1");
  }
  if (spec.max_steps == 0) {
    throw Error(ErrorCode::kInvalidSpec,
                "max_steps must be at least 1 to classify runs");
  }
  const std::vector<PlannedRun> plan = expand(spec);

  std::vector<std::optional<RunOutcome>> slots(plan.size());
  std::vector<std::string> failures(plan.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= plan.size()) return;
      try {
        TimeSeries series;
        slots[i] = execute_run(plan[i], sink ? &series : nullptr);
        if (sink) sink(plan[i], series);
      } catch (const std::exception& e) {
        failures[i] = e.what();
        abort.store(true);
      }
    }
  };

  const std::size_t n_threads = std::min(workers, plan.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!failures[i].empty()) {
      throw Error(ErrorCode::kRunFailed,
                  "run " + std::to_string(i) + " failed (config id " +
                      std::to_string(plan[i].cell_index) + ", seed " +
                      std::to_string(plan[i].config.seed) +
                      "): " + failures[i]);
    }
  }

  SweepResult result;
  result.runs.reserve(plan.size());
  for (auto& slot : slots) result.runs.push_back(std::move(*slot));
  result.cells = aggregate(plan, result.runs);
  return result;
}

std::string sweep_summary_csv(const SweepResult& result) {
  std::string out(kSweepSummaryHeader);
  out += '\n';
  for (const auto& c : result.cells) {
    out += std::to_string(c.cell_index) + ',' + std::to_string(c.csc_count) +
           ',' + std::to_string(c.avg_degree) + ',' +
           format_fixed(c.factors.angiogenesis) + ',' +
           format_fixed(c.factors.recovery) + ',' +
           format_fixed(c.factors.quiescence) + ',' + std::to_string(c.runs) +
           ',' + format_fixed(c.volume_ratio.mean) + ',' +
           format_fixed(c.volume_ratio.std) + ',' +
           format_fixed(c.metastatic_fraction.mean) + ',' +
           format_fixed(c.metastatic_fraction.std) + ',' +
           format_fixed(c.metastatic_count.mean) + ',' +
           format_fixed(c.metastatic_count.std) + ',' +
           std::to_string(c.progression) + ',' +
           std::to_string(c.rejection) + ',' +
           std::to_string(c.stabilization) + '\n';
  }
  return out;
}

std::string sweep_runs_csv(const SweepResult& result) {
  std::string out(kSweepRunsHeader);
  out += '\n';
  for (const auto& r : result.runs) {
    const StepRecord& f = r.final_record;
    out += std::to_string(r.run_index) + ',' + std::to_string(r.cell_index) +
           ',' + std::to_string(r.seed) + ',' + std::to_string(f.step) + ',' +
           std::to_string(f.n_nodes) + ',' + std::to_string(f.n_edges) + ',' +
           std::to_string(f.count_normal) + ',' +
           std::to_string(f.count_quiescent) + ',' +
           std::to_string(f.count_metastatic) + ',' +
           std::to_string(f.count_dead) + ',' + format_fixed(f.volume_ratio) +
           ',' + std::string(to_string(r.tci)) + ',' +
           std::string(to_string(r.reason)) + '\n';
  }
  return out;
}

}  // namespace tumornet
