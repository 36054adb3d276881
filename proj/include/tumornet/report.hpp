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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tumornet/engine.hpp"
#include "tumornet/metrics.hpp"

namespace tumornet {

inline constexpr std::string_view kRunCsvHeader =
    "step,n_nodes,n_edges,normal,quiescent,metastatic,dead,volume_ratio";

/// One header line plus one row per record; volume_ratio in fixed notation
/// with six decimals. Throws kInvalidInput for an empty series.
std::string run_csv(const TimeSeries& series);

/// Parses text produced by run_csv. Throws kInvalidInput on a header or row
/// mismatch, naming the line.
TimeSeries parse_run_csv(std::string_view text);

struct RunSummary {
  std::uint64_t seed = 0;
  std::vector<std::string> defaults_applied;
  Termination termination = Termination::kMaxSteps;
  StepRecord final_record;
  std::optional<TciClass> tci;  // absent for a single-record series
  DegreeHistogram degree_histogram;
  double wall_clock_seconds = 0.0;
};

/// Single-line JSON object with keys in a fixed order:
/// seed, defaults_applied, termination, steps, n_nodes, n_edges, normal,
/// quiescent, metastatic, dead, volume_ratio, tci, degree_histogram,
/// wall_clock_seconds.
std::string summary_json(const RunSummary& summary);

// Whole-file helpers; failures are kIo and name the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

// Minimal CSV access for the analysis and plotting tools.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a column, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
};

/// Comma-split table; every row must have the header's column count.
CsvTable parse_csv(std::string_view text);

}  // namespace tumornet
