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
#include <span>
#include <string>
#include <vector>

#include "tumornet/rng.hpp"

namespace tumornet {

// Dense node identifier. Ids are assigned 0, 1, 2, ... in creation order and
// never reused or renumbered.
using NodeId = std::uint32_t;

/// Undirected simple graph with per-node sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_nodes);

  std::size_t num_nodes() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool contains(NodeId id) const noexcept { return id < adjacency_.size(); }

  NodeId add_node();

  // Returns false (and changes nothing) if the edge already exists.
  // Throws on unknown endpoints or a self-loop.
  bool add_edge(NodeId a, NodeId b);
  bool has_edge(NodeId a, NodeId b) const;

  // Ascending neighbor ids.
  std::span<const NodeId> neighbors(NodeId id) const;
  std::size_t degree(NodeId id) const { return neighbors(id).size(); }

 private:
  void check_node(NodeId id) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
};

struct DegreeSequence {
  // Indexed by ascending NodeId.
  std::vector<std::size_t> degrees;

  std::size_t degree_sum() const;
  // Handshake lemma: m = (1/2) * sum of degrees.
  std::size_t edge_count() const { return degree_sum() / 2; }
};

// Which sampler to use for G(n, p).
enum class ErSampler {
  // Visit every pair (i < j) lexicographically; one draw per pair. Reference.
  kPairwise,
  // Geometric skipping between accepted pairs; O(n + m). Same distribution,
  // different draw sequence.
  kGeometricSkip,
  // kPairwise up to kPairwiseNodeLimit nodes, kGeometricSkip above.
  kAuto,
};

inline constexpr std::size_t kPairwiseNodeLimit = 20000;

/// G(n, p) by independent inclusion of each of the n(n-1)/2 candidate edges.
Graph generate_er(std::size_t n, double p, RngStream& rng,
                  ErSampler sampler = ErSampler::kPairwise);

/// Seeds the "graph" stream (pairwise) or "graph.skip" stream (geometric
/// skip) from `seed` and generates G(n, p).
Graph generate_er(std::size_t n, double p, std::uint64_t seed,
                  ErSampler sampler = ErSampler::kAuto);

/// ln(n) / n: above this edge probability G(n, p) is connected with
/// probability tending to one.
double connectivity_threshold(std::size_t n);

bool is_connected(const Graph& g);

DegreeSequence degree_sequence(const Graph& g);

/// Appends a node linked to `anchor` plus up to `k_extra` further distinct
/// neighbors drawn uniformly without replacement from the other existing
/// nodes. Fewer candidates than k_extra means all of them are linked.
NodeId add_node_linked(Graph& g, NodeId anchor, std::size_t k_extra,
                       RngStream& rng);

/// Canonical edge-list text: "nodes=<n>" then one "i j" line per edge with
/// i < j, sorted lexicographically.
std::string to_edge_list(const Graph& g);

}  // namespace tumornet
