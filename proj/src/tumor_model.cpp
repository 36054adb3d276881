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

#include "tumornet/tumor_model.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tumornet/error.hpp"

namespace tumornet {

std::string_view to_string(CellState state) {
  switch (state) {
    case CellState::kNormal:
      return "normal";
    case CellState::kQuiescent:
      return "quiescent";
    case CellState::kMetastatic:
      return "metastatic";
    case CellState::kDead:
      return "dead";
  }
  return "unknown";
}

double factor_level(Factor factor, Level level) {
  static constexpr std::array<std::array<double, 3>, 3> kLevels{{
      {0.0, 0.4, 1.0},  // angiogenesis
      {0.1, 0.3, 1.0},  // recovery
      {0.1, 0.5, 1.0},  // quiescence
  }};
  return kLevels[static_cast<std::size_t>(factor)]
                [static_cast<std::size_t>(level)];
}

std::optional<Factor> parse_factor(std::string_view name) {
  if (name == "angiogenesis") return Factor::kAngiogenesis;
  if (name == "recovery") return Factor::kRecovery;
  if (name == "quiescence" || name == "quiescent") return Factor::kQuiescence;
  return std::nullopt;
}

std::optional<Level> parse_level(std::string_view name) {
  if (name == "low") return Level::kLow;
  if (name == "medium") return Level::kMedium;
  if (name == "high") return Level::kHigh;
  return std::nullopt;
}

double factor_level(std::string_view factor, std::string_view level) {
  const auto f = parse_factor(factor);
  if (!f) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown control factor '" + std::string(factor) + "'");
  }
  const auto l = parse_level(level);
  if (!l) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown factor level '" + std::string(level) + "'");
  }
  return factor_level(*f, *l);
}

double effective_edge_prob(const ModelConfig& config) {
  if (config.edge_prob) return *config.edge_prob;
  if (config.n_initial < 2) return 0.0;
  return std::min(1.0, static_cast<double>(config.avg_degree) /
                           static_cast<double>(config.n_initial - 1));
}

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

void require_unit(double value, const char* name) {
  if (!in_unit_interval(value)) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void validate(const ModelConfig& config) {
  if (config.n_initial == 0) {
    throw Error(ErrorCode::kInvalidConfig, "n_initial must be positive");
  }
  if (config.avg_degree < 1) {
    throw Error(ErrorCode::kInvalidConfig, "K must be at least 1");
  }
  require_unit(config.factors.angiogenesis, "angiogenesis");
  require_unit(config.factors.recovery, "recovery");
  require_unit(config.factors.quiescence, "quiescence");
  require_unit(config.spawn_rate, "spawn_rate");
  require_unit(config.metastasis_rate, "metastasis_rate");
  require_unit(config.apoptosis_rate, "apoptosis_rate");
  const double p = effective_edge_prob(config);
  require_unit(p, "p");
  // A single cell is connected whatever p is.
  if (config.n_initial > 1 && !config.allow_below_threshold) {
    const double threshold = connectivity_threshold(config.n_initial);
    if (p <= threshold) {
      throw Error(ErrorCode::kBelowThreshold,
                  "edge probability " + std::to_string(p) +
                      " does not exceed ln(n)/n = " +
                      std::to_string(threshold) + " for n=" +
                      std::to_string(config.n_initial) +
                      " (set allow_below_threshold to override)");
    }
  }
}

TumorModel::TumorModel(const ModelConfig& config)
    : Model(config.seed),
      config_(config),
      transitions_(config.seed, streams::kTransitions),
      growth_(config.seed, streams::kGrowth) {
  validate(config_);
  graph_ = generate_er(config_.n_initial, effective_edge_prob(config_),
                       config_.seed, ErSampler::kAuto);
  agents_.reserve(config_.n_initial);
  for (std::size_t i = 0; i < config_.n_initial; ++i) {
    const auto id = static_cast<AgentId>(i);
    agents_.push_back(CellAgent{id, id, CellState::kNormal, true});
  }
}

TumorModel init_model(const ModelConfig& config) { return TumorModel(config); }

std::vector<AgentId> TumorModel::live_agents() const {
  std::vector<AgentId> live;
  live.reserve(agents_.size());
  for (const auto& a : agents_) {
    if (a.state != CellState::kDead) live.push_back(a.id);
  }
  return live;
}

void TumorModel::activate(AgentId id) { agent_step(id); }

StepRecord TumorModel::tally() const {
  StepRecord r;
  r.n_nodes = graph_.num_nodes();
  r.n_edges = graph_.num_edges();
  for (const auto& a : agents_) {
    switch (a.state) {
      case CellState::kNormal:
        ++r.count_normal;
        break;
      case CellState::kQuiescent:
        ++r.count_quiescent;
        break;
      case CellState::kMetastatic:
        ++r.count_metastatic;
        break;
      case CellState::kDead:
        ++r.count_dead;
        break;
    }
  }
  r.volume_ratio = r.n_nodes == 0 ? 0.0
                                  : static_cast<double>(r.n_edges) /
                                        static_cast<double>(r.n_nodes);
  return r;
}

Transition TumorModel::agent_step(AgentId id) {
  CellAgent& cell = agents_.at(id);
  const ControlFactors& f = config_.factors;
  switch (cell.state) {
    case CellState::kDead:
      throw Error(ErrorCode::kContractViolation,
                  "agent_step on dead agent " + std::to_string(id));

    case CellState::kMetastatic:
      if (transitions_.bernoulli(f.recovery)) {
        cell.state = CellState::kDead;
        return Transition::kToDead;
      }
      if (transitions_.bernoulli(f.angiogenesis * config_.spawn_rate)) {
        spawn_cell(id);
        return Transition::kSpawned;
      }
      return Transition::kUnchanged;

    case CellState::kQuiescent:
      if (transitions_.bernoulli(f.recovery)) {
        cell.state = CellState::kNormal;
        return Transition::kToNormal;
      }
      return Transition::kUnchanged;

    case CellState::kNormal: {
      if (transitions_.bernoulli(f.quiescence * (1.0 - f.angiogenesis))) {
        cell.state = CellState::kQuiescent;
        return Transition::kToQuiescent;
      }
      const double relative_degree =
          static_cast<double>(graph_.degree(cell.node)) /
          static_cast<double>(config_.avg_degree);
      const double p_metastasis = std::min(
          1.0, f.angiogenesis * config_.metastasis_rate * relative_degree);
      if (transitions_.bernoulli(p_metastasis)) {
        cell.state = CellState::kMetastatic;
        return Transition::kToMetastatic;
      }
      if (transitions_.bernoulli(config_.apoptosis_rate)) {
        cell.state = CellState::kDead;
        return Transition::kToDead;
      }
      return Transition::kUnchanged;
    }
  }
  return Transition::kUnchanged;
}

const CellAgent& TumorModel::spawn_cell(AgentId parent) {
  const CellAgent& p = agents_.at(parent);
  if (p.state != CellState::kMetastatic) {
    throw Error(ErrorCode::kContractViolation,
                "spawn_cell from non-metastatic agent " +
                    std::to_string(parent));
  }
  const auto k_extra = static_cast<std::size_t>(config_.avg_degree - 1);
  const NodeId node = add_node_linked(graph_, p.node, k_extra, growth_);
  agents_.push_back(CellAgent{node, node, CellState::kNormal, false});
  return agents_.back();
}

void TumorModel::set_state(AgentId id, CellState state) {
  agents_.at(id).state = state;
}

}  // namespace tumornet
