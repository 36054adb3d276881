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

#include "tumornet/metrics.hpp"

#include <string>
#include <vector>

#include "tumornet/error.hpp"

namespace tumornet {

double volume_ratio(const Graph& g) {
  if (g.num_nodes() == 0) {
    throw Error(ErrorCode::kInvalidInput, "volume ratio of an empty graph");
  }
  return static_cast<double>(g.num_edges()) /
         static_cast<double>(g.num_nodes());
}

std::optional<Algorithm2Result> algorithm2_volume(const Graph& g, int k,
                                                  double factor) {
  if (g.num_nodes() == 0) {
    throw Error(ErrorCode::kInvalidInput, "volume of an empty graph");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "K must be at least 1");
  if (!(factor >= 0.0 && factor <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "factor must lie in [0, 1]");
  }
  if (!is_connected(g)) return std::nullopt;

  Algorithm2Result result;
  result.volume = volume_ratio(g);
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    const auto node = static_cast<NodeId>(i);
    const double normalized =
        static_cast<double>(g.degree(node)) / static_cast<double>(k);
    if (normalized < factor) {
      result.gate_node = node;
      break;
    }
  }
  return result;
}

double spheroid_volume(double width, double length) {
  if (width < 0.0 || length < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "tumor width and length must be non-negative");
  }
  return width * width * length / 2.0;
}

std::string_view to_string(TciClass tci) {
  switch (tci) {
    case TciClass::kProgression:
      return "progression";
    case TciClass::kRejection:
      return "rejection";
    case TciClass::kStabilization:
      return "stabilization";
  }
  return "unknown";
}

TciClass tci_classify(std::span<const double> volume_ratios, double delta) {
  if (volume_ratios.size() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "TCI needs at least two records, got " +
                    std::to_string(volume_ratios.size()));
  }
  const double initial = volume_ratios.front();
  if (!(initial > 0.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "TCI needs a positive initial volume ratio");
  }
  const double r = volume_ratios.back() / initial;
  if (r > 1.0 + delta) return TciClass::kProgression;
  if (r < 1.0 - delta) return TciClass::kRejection;
  return TciClass::kStabilization;
}

TciClass tci_classify(const TimeSeries& series, double delta) {
  std::vector<double> ratios;
  ratios.reserve(series.size());
  for (const auto& r : series.records) ratios.push_back(r.volume_ratio);
  return tci_classify(ratios, delta);
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram hist;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    ++hist[g.degree(static_cast<NodeId>(i))];
  }
  return hist;
}

}  // namespace tumornet
