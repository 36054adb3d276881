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

#include <string>

#include "tumornet/error.hpp"
#include "tumornet/plot.hpp"
#include "tumornet/report.hpp"
#include "tumornet/sweep.hpp"

using namespace tumornet;

namespace {

std::size_t count_of(const std::string& text, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::string small_run_csv() {
  return std::string(kRunCsvHeader) +
         "\n0,10,20,10,0,0,0,2.000000\n"
         "1,11,22,8,1,1,1,2.000000\n"
         "2,12,25,7,2,2,1,2.083333\n";
}

}  // namespace

TEST_CASE("timeseries plot draws one polyline per cell state") {
  const std::string svg = plot_svg(small_run_csv(), PlotKind::kTimeseries);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
  CHECK(count_of(svg, "<polyline") == 4);
  for (const auto* label : {"normal", "quiescent", "metastatic", "dead"}) {
    CHECK(svg.find(label) != std::string::npos);
  }
  CHECK(svg.find(">step</text>") != std::string::npos);
  CHECK(svg == plot_svg(small_run_csv(), PlotKind::kTimeseries));
}

TEST_CASE("plot input errors") {
  const auto code = [](std::string_view csv, PlotKind kind) {
    try {
      plot_svg(csv, kind);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  CHECK(code(std::string(kRunCsvHeader) + "\n", PlotKind::kTimeseries) ==
        ErrorCode::kInvalidInput);
  CHECK(code("a,b\n1,2\n", PlotKind::kTimeseries) == ErrorCode::kInvalidInput);
  CHECK(code(small_run_csv(), PlotKind::kSweep) == ErrorCode::kInvalidInput);
  CHECK(parse_plot_kind("sweep") == PlotKind::kSweep);
  CHECK_FALSE(parse_plot_kind("pie").has_value());
}

TEST_CASE("sweep plot draws one polyline per parameter group") {
  SweepSpec spec;
  spec.csc_counts = {30, 50};
  spec.k_values = {6};
  spec.angiogenesis_values = {0.2, 0.6, 0.9};
  spec.recovery_values = {0.3};
  spec.quiescence_values = {0.5};
  spec.seeds_per_cell = 2;
  spec.max_steps = 5;
  const std::string csv = sweep_summary_csv(run_sweep(spec, 1));
  const std::string svg = plot_svg(csv, PlotKind::kSweep);
  CHECK(count_of(svg, "<polyline") == 2);
  CHECK(svg.find("csc_count=30") != std::string::npos);
  CHECK(svg.find("csc_count=50") != std::string::npos);
  CHECK(svg.find(">angiogenesis</text>") != std::string::npos);
  CHECK(svg.find(">mean_volume_ratio</text>") != std::string::npos);
}
