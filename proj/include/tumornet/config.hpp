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

#include <string>
#include <string_view>
#include <vector>

#include "tumornet/sweep.hpp"
#include "tumornet/tumor_model.hpp"

namespace tumornet {

struct ParsedConfig {
  ModelConfig config;
  // Optional keys that were absent and took their default, in key order.
  std::vector<std::string> defaulted;
};

/// Parses flat `key=value` text. '#' starts a comment; blank lines are
/// ignored. Required keys: n_initial, K. Factor keys accept a number or
/// low/medium/high. Errors are kInvalidConfig with "line N:" in the message.
///
/// Keys: n_initial, K, p, angiogenesis, recovery, quiescence, spawn_rate,
/// metastasis_rate, apoptosis_rate, max_steps, seed, allow_below_threshold.
ParsedConfig parse_config(std::string_view text);

// Inverse of parse_config for a validated config; every key is written.
std::string serialize_config(const ModelConfig& config);

/// Same syntax with comma-separated lists for the swept dimensions:
/// csc_counts, K, angiogenesis, recovery, quiescence (all required) and
/// seeds_per_cell, base_seed, max_steps, allow_below_threshold.
/// Errors are kInvalidSpec.
SweepSpec parse_sweep_spec(std::string_view text);

}  // namespace tumornet
