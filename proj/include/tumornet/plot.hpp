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

#include <optional>
#include <string>
#include <string_view>

namespace tumornet {

enum class PlotKind { kTimeseries, kSweep };

std::optional<PlotKind> parse_plot_kind(std::string_view name);

/// Renders a run CSV (kTimeseries: one polyline per cell state against step)
/// or a sweep summary CSV (kSweep: mean_volume_ratio against angiogenesis,
/// one polyline per remaining parameter combination) as a standalone SVG.
/// Throws kInvalidInput on a header mismatch or when there are no data rows.
std::string plot_svg(std::string_view csv_text, PlotKind kind);

}  // namespace tumornet
