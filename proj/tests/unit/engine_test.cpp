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

#include <algorithm>
#include <vector>

#include "tumornet/engine.hpp"
#include "tumornet/report.hpp"
#include "tumornet/tumor_model.hpp"

using namespace tumornet;

namespace {

// Minimal model: agents are nodes of a path graph; each activation is logged.
// Optionally every edge is dropped after a given number of activations.
class ToyModel : public Model {
 public:
  ToyModel(std::size_t n, std::uint64_t seed, bool connected = true)
      : Model(seed), graph_(n) {
    for (std::size_t i = 0; connected && i + 1 < n; ++i) {
      graph_.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
    }
    alive_.assign(n, true);
  }

  const Graph& graph() const override { return graph_; }

  std::vector<AgentId> live_agents() const override {
    std::vector<AgentId> ids;
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      if (alive_[i]) ids.push_back(static_cast<AgentId>(i));
    }
    return ids;
  }

  void activate(AgentId id) override {
    log.push_back(id);
    if (cut_after_activations > 0 && log.size() == cut_after_activations) {
      Graph split(graph_.num_nodes());
      graph_ = split;
    }
  }

  StepRecord tally() const override {
    StepRecord r;
    r.n_nodes = graph_.num_nodes();
    r.n_edges = graph_.num_edges();
    for (const bool a : alive_) (a ? r.count_normal : r.count_dead) += 1;
    r.volume_ratio = static_cast<double>(r.n_edges) /
                     static_cast<double>(r.n_nodes);
    return r;
  }

  std::vector<AgentId> log;
  std::size_t cut_after_activations = 0;

 private:
  Graph graph_;
  std::vector<bool> alive_;
};

ModelConfig small_config(std::uint64_t seed) {
  ModelConfig c;
  c.n_initial = 120;
  c.avg_degree = 6;
  c.factors = {0.6, 0.3, 0.5};
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("step activates each live agent once in a seed-determined order") {
  ToyModel a(50, 9);
  ToyModel b(50, 9);
  ToyModel c(50, 10);
  step(a);
  step(b);
  step(c);
  CHECK(a.log == b.log);
  CHECK(a.log != c.log);
  auto sorted = a.log;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == a.live_agents());
  // A fresh permutation every step.
  const auto first = a.log;
  a.log.clear();
  step(a);
  CHECK(a.log != first);
}

TEST_CASE("run with max_steps 0 records only the initial state") {
  TumorModel model(small_config(1));
  const RunResult result = run(model, 0);
  CHECK(result.series.size() == 1);
  CHECK(result.series.initial().step == 0);
  CHECK(result.reason == Termination::kMaxSteps);
}

TEST_CASE("an all-dead population ends at step 1 as extinct") {
  TumorModel model(small_config(2));
  for (std::size_t i = 0; i < model.agents().size(); ++i) {
    model.set_state(static_cast<AgentId>(i), CellState::kDead);
  }
  const StepRecord before = collect(model);
  const RunResult result = run(model, 10);
  CHECK(result.reason == Termination::kExtinct);
  REQUIRE(result.series.size() == 2);
  CHECK(result.series.final().step == 1);
  CHECK(result.series.final().count_dead == before.count_dead);
  CHECK(result.series.final().n_nodes == before.n_nodes);
}

TEST_CASE("a graph that falls apart stops the run after recording the step") {
  ToyModel model(10, 3);
  model.cut_after_activations = 15;  // during the second step
  const RunResult result = run(model, 50);
  CHECK(result.reason == Termination::kDisconnected);
  CHECK(result.series.size() == 3);
  CHECK(result.series.final().n_edges == 0);
}

TEST_CASE("a graph that starts disconnected keeps running") {
  ToyModel model(10, 3, /*connected=*/false);
  const RunResult result = run(model, 5);
  CHECK(result.reason == Termination::kMaxSteps);
  CHECK(result.series.size() == 6);
  CHECK(result.series.final().step == 5);
}

TEST_CASE("collect is a pure read") {
  TumorModel model(small_config(3));
  const StepRecord a = collect(model);
  const StepRecord b = collect(model);
  CHECK(a == b);
  CHECK(model.series().empty());
  CHECK(a.volume_ratio == doctest::Approx(static_cast<double>(a.n_edges) /
                                          static_cast<double>(a.n_nodes)));
}

TEST_CASE("fresh 550-cell model is all Normal") {
  ModelConfig c;
  c.n_initial = 550;
  c.avg_degree = 8;
  TumorModel model(c);
  const StepRecord r = collect(model);
  CHECK(r.count_normal == 550);
  CHECK(r.count_quiescent == 0);
  CHECK(r.count_metastatic == 0);
  CHECK(r.count_dead == 0);
}

TEST_CASE("identical config and seed give byte-identical series") {
  TumorModel a(small_config(4));
  TumorModel b(small_config(4));
  const auto ra = run(a, 60);
  const auto rb = run(b, 60);
  CHECK(ra.series == rb.series);
  CHECK(run_csv(ra.series) == run_csv(rb.series));
}

TEST_CASE("activation fairness: spawned cells wait for the next step") {
  ModelConfig c = small_config(5);
  c.factors = {1.0, 0.0, 0.0};
  c.spawn_rate = 1.0;
  TumorModel model(c);
  for (AgentId id = 0; id < 60; ++id) model.set_state(id, CellState::kMetastatic);

  for (int s = 0; s < 3; ++s) {
    const auto live = model.live_agents();
    std::vector<AgentId> activated;
    step(model, [&](AgentId id) { activated.push_back(id); });
    std::sort(activated.begin(), activated.end());
    CHECK(activated == live);
    CHECK(model.agents().size() > live.size());
  }
}

TEST_CASE("fuzz: partition and monotone node count over random configs") {
  RngStream meta(77, "fuzz");
  for (int trial = 0; trial < 100; ++trial) {
    ModelConfig c;
    c.n_initial = 20 + meta.uniform_index(150);
    c.avg_degree = 3 + static_cast<int>(meta.uniform_index(6));
    // recovery >= 0.3 and spawn_rate <= 0.25 keep growth subcritical.
    c.factors = {meta.uniform(), 0.3 + 0.7 * meta.uniform(), meta.uniform()};
    c.spawn_rate = 0.25 * meta.uniform();
    c.metastasis_rate = meta.uniform();
    c.apoptosis_rate = 0.05 * meta.uniform();
    c.allow_below_threshold = true;
    c.seed = meta.next_u64();
    TumorModel model(c);
    const RunResult result = run(model, 50);
    std::size_t prev_nodes = 0;
    for (std::size_t i = 0; i < result.series.size(); ++i) {
      const StepRecord& r = result.series.records[i];
      REQUIRE(r.step == i);
      REQUIRE(r.count_normal + r.count_quiescent + r.count_metastatic +
                  r.count_dead ==
              r.n_nodes);
      REQUIRE(r.n_nodes >= prev_nodes);
      prev_nodes = r.n_nodes;
    }
  }
}
