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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "tumornet/engine.hpp"
#include "tumornet/graph.hpp"

namespace tumornet {

/// Graph-based tumor volume ratio m / n.
double volume_ratio(const Graph& g);

struct Algorithm2Result {
  double volume = 0.0;
  // First node (ascending id) with deg/K < factor, if any. Audit only: the
  // returned volume is m/n either way.
  std::optional<NodeId> gate_node;
};

/// Volume procedure gated on connectivity. Returns nullopt for a
/// disconnected graph; otherwise m/n plus where the degree gate fired.
std::optional<Algorithm2Result> algorithm2_volume(const Graph& g, int k,
                                                  double factor);

/// Clinical caliper approximation W^2 * L / 2 for a roughly spherical solid
/// tumor. Kept for comparison only; undefined on a graph.
double spheroid_volume(double width, double length);

enum class TciClass { kProgression, kRejection, kStabilization };

std::string_view to_string(TciClass tci);

inline constexpr double kDefaultTciBand = 0.1;

// r = final / initial ratio: r > 1+delta progression, r < 1-delta rejection,
// otherwise stabilization.
TciClass tci_classify(std::span<const double> volume_ratios,
                      double delta = kDefaultTciBand);
TciClass tci_classify(const TimeSeries& series,
                      double delta = kDefaultTciBand);

using DegreeHistogram = std::map<std::size_t, std::size_t>;

DegreeHistogram degree_histogram(const Graph& g);

}  // namespace tumornet
