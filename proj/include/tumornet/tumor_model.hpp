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
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tumornet/engine.hpp"
#include "tumornet/graph.hpp"
#include "tumornet/rng.hpp"

namespace tumornet {

enum class CellState : std::uint8_t { kNormal, kQuiescent, kMetastatic, kDead };

std::string_view to_string(CellState state);

struct CellAgent {
  AgentId id = 0;  // equal to node
  NodeId node = 0;
  CellState state = CellState::kNormal;
  bool is_stem = false;
};

// Table of control factors; each value lies in [0, 1].
struct ControlFactors {
  double angiogenesis = 0.4;
  double recovery = 0.3;
  double quiescence = 0.5;

  bool operator==(const ControlFactors&) const = default;
};

enum class Factor { kAngiogenesis, kRecovery, kQuiescence };
enum class Level { kLow, kMedium, kHigh };

//                low   medium  high
// angiogenesis   0.0   0.4     1.0
// recovery       0.1   0.3     1.0
// quiescence     0.1   0.5     1.0
double factor_level(Factor factor, Level level);

// Accepts "angiogenesis", "recovery", "quiescence" (or "quiescent") and
// "low" / "medium" / "high". Throws kInvalidArgument otherwise.
double factor_level(std::string_view factor, std::string_view level);

std::optional<Factor> parse_factor(std::string_view name);
std::optional<Level> parse_level(std::string_view name);

struct ModelConfig {
  std::size_t n_initial = 550;
  // Configured average degree K.
  int avg_degree = 4;
  // Unset means K / (n_initial - 1).
  std::optional<double> edge_prob;
  ControlFactors factors;
  double spawn_rate = 0.25;       // gamma
  double metastasis_rate = 0.5;   // beta
  double apoptosis_rate = 0.01;   // alpha
  std::uint64_t max_steps = 500;
  std::uint64_t seed = 0;
  // Permit an initial edge probability at or below ln(n)/n.
  bool allow_below_threshold = false;

  bool operator==(const ModelConfig&) const = default;
};

// Explicit edge_prob if set, otherwise min(1, K / (n_initial - 1)); 0 for a
// single node.
double effective_edge_prob(const ModelConfig& config);

// Throws kInvalidConfig for out-of-range fields and kBelowThreshold when the
// edge probability does not exceed ln(n)/n and no override was given.
void validate(const ModelConfig& config);

enum class Transition {
  kUnchanged,
  kToQuiescent,
  kToNormal,
  kToMetastatic,
  kToDead,
  kSpawned,
};

/// Cell agents on an Erdos-Renyi graph, one per node.
///
/// Per activation a live agent applies the first matching rule:
///   Metastatic: recovery -> Dead, else angiogenesis*gamma -> spawn a cell.
///   Quiescent:  recovery -> Normal.
///   Normal:     quiescence*(1-angiogenesis) -> Quiescent,
///               else min(1, angiogenesis*beta*deg/K) -> Metastatic,
///               else alpha -> Dead.
/// Dead cells keep their node and edges and are never activated.
class TumorModel : public Model {
 public:
  // Builds G(n_initial, p) from the "graph" substream and seeds every node
  // with a Normal stem cell.
  explicit TumorModel(const ModelConfig& config);

  const Graph& graph() const override { return graph_; }
  std::vector<AgentId> live_agents() const override;
  void activate(AgentId id) override;
  StepRecord tally() const override;

  const ModelConfig& config() const noexcept { return config_; }
  const std::vector<CellAgent>& agents() const noexcept { return agents_; }
  const CellAgent& agent(AgentId id) const { return agents_.at(id); }

  // Applies one rule to a live agent. Throws kContractViolation on Dead.
  Transition agent_step(AgentId id);

  // Grows a Normal, non-stem cell attached to a Metastatic parent's node plus
  // K-1 further random neighbors, using the "growth" substream.
  const CellAgent& spawn_cell(AgentId parent);

  // Test hook for building specific populations.
  void set_state(AgentId id, CellState state);

 private:
  ModelConfig config_;
  Graph graph_;
  std::vector<CellAgent> agents_;
  RngStream transitions_;
  RngStream growth_;
};

TumorModel init_model(const ModelConfig& config);

}  // namespace tumornet
