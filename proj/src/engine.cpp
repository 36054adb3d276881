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

#include "tumornet/engine.hpp"

namespace tumornet {

std::string_view to_string(Termination reason) {
  switch (reason) {
    case Termination::kMaxSteps:
      return "max_steps";
    case Termination::kDisconnected:
      return "disconnected";
    case Termination::kExtinct:
      return "extinct";
  }
  return "unknown";
}

StepRecord collect(const Model& model) {
  StepRecord record = model.tally();
  record.step = model.steps_taken();
  return record;
}

StepRecord step(Model& model, const std::function<void(AgentId)>& on_activate) {
  std::vector<AgentId> order = model.live_agents();
  model.schedule_.shuffle(std::span<AgentId>(order));
  for (const AgentId id : order) {
    if (on_activate) on_activate(id);
    model.activate(id);
  }
  ++model.steps_taken_;
  StepRecord record = collect(model);
  model.series_.records.push_back(record);
  return record;
}

RunResult run(Model& model, std::uint64_t max_steps) {
  if (model.series_.empty()) model.series_.records.push_back(collect(model));

  Termination reason = Termination::kMaxSteps;
  bool was_connected = is_connected(model.graph());
  for (std::uint64_t t = 0; t < max_steps; ++t) {
    step(model);
    const bool connected = is_connected(model.graph());
    if (was_connected && !connected) {
      reason = Termination::kDisconnected;
      break;
    }
    was_connected = connected;
    if (model.live_agents().empty()) {
      reason = Termination::kExtinct;
      break;
    }
  }
  return RunResult{model.series_, reason};
}

}  // namespace tumornet
