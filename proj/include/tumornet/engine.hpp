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
#include <functional>
#include <string_view>
#include <vector>

#include "tumornet/graph.hpp"
#include "tumornet/rng.hpp"

namespace tumornet {

using AgentId = std::uint32_t;

// Per-step tallies. The four state counts partition n_nodes.
struct StepRecord {
  std::uint64_t step = 0;
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  std::size_t count_normal = 0;
  std::size_t count_quiescent = 0;
  std::size_t count_metastatic = 0;
  std::size_t count_dead = 0;
  double volume_ratio = 0.0;

  bool operator==(const StepRecord&) const = default;
};

struct TimeSeries {
  // Consecutive steps starting at 0.
  std::vector<StepRecord> records;

  bool empty() const noexcept { return records.empty(); }
  std::size_t size() const noexcept { return records.size(); }
  const StepRecord& initial() const { return records.front(); }
  const StepRecord& final() const { return records.back(); }

  bool operator==(const TimeSeries&) const = default;
};

enum class Termination { kMaxSteps, kDisconnected, kExtinct };

std::string_view to_string(Termination reason);

struct RunResult {
  TimeSeries series;
  Termination reason = Termination::kMaxSteps;
};

class Model;

/// Snapshot of the current state. Pure; does not touch the series.
StepRecord collect(const Model& model);

/// Activates every agent that is live at the start of the step exactly once,
/// in a fresh uniformly random order, then appends and returns the post-step
/// record. Agents created during the step wait for the next one.
/// `on_activate` (optional) sees each id just before it is activated.
StepRecord step(Model& model,
                const std::function<void(AgentId)>& on_activate = {});

/// Records the initial state (if nothing was recorded yet), then steps until
/// max_steps is reached, the graph goes from connected to disconnected, or no
/// live agents remain. The last executed step is always recorded.
RunResult run(Model& model, std::uint64_t max_steps);

/// Base class for a stepped agent-based model living on a graph.
///
/// Subclasses own their agents and graph. The base owns the step counter, the
/// "schedule" substream used for activation order, and the collected series.
class Model {
 public:
  explicit Model(std::uint64_t seed)
      : seed_(seed), schedule_(seed, streams::kSchedule) {}
  virtual ~Model() = default;

  Model(const Model&) = default;
  Model& operator=(const Model&) = default;
  Model(Model&&) = default;
  Model& operator=(Model&&) = default;

  virtual const Graph& graph() const = 0;

  // Ids of agents eligible for activation, ascending.
  virtual std::vector<AgentId> live_agents() const = 0;

  virtual void activate(AgentId id) = 0;

  // State tallies; the step field is filled in by collect().
  virtual StepRecord tally() const = 0;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t steps_taken() const noexcept { return steps_taken_; }
  const TimeSeries& series() const noexcept { return series_; }

 private:
  friend StepRecord step(Model&, const std::function<void(AgentId)>&);
  friend RunResult run(Model&, std::uint64_t);

  std::uint64_t seed_;
  std::uint64_t steps_taken_ = 0;
  RngStream schedule_;
  TimeSeries series_;
};

}  // namespace tumornet
