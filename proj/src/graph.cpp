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

#include "tumornet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "tumornet/error.hpp"

namespace tumornet {

Graph::Graph(std::size_t num_nodes) : adjacency_(num_nodes) {}

NodeId Graph::add_node() {
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_node(NodeId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kInvalidNode,
                "unknown node " + std::to_string(id) + " (graph has " +
                    std::to_string(num_nodes()) + " nodes)");
  }
}

bool Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) {
    throw Error(ErrorCode::kInvalidInput,
                "self-loop on node " + std::to_string(a));
  }
  auto& adj_a = adjacency_[a];
  const auto pos_a = std::lower_bound(adj_a.begin(), adj_a.end(), b);
  if (pos_a != adj_a.end() && *pos_a == b) return false;
  adj_a.insert(pos_a, b);
  auto& adj_b = adjacency_[b];
  adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
  ++num_edges_;
  return true;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::span<const NodeId> Graph::neighbors(NodeId id) const {
  check_node(id);
  return adjacency_[id];
}

std::size_t DegreeSequence::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
}

namespace {

void check_er_args(std::size_t n, double p) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidSize, "graph size must be at least 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge probability must lie in [0, 1]");
  }
}

void sample_pairwise(Graph& g, std::size_t n, double p, RngStream& rng) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) {
        g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
}

// Batagelj & Brandes skipping over the lower triangle (w < v).
void sample_geometric_skip(Graph& g, std::size_t n, double p, RngStream& rng) {
  if (p <= 0.0 || n < 2) return;
  if (p >= 1.0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
    return;
  }
  const double log_q = std::log1p(-p);
  const auto total_pairs = static_cast<double>(n) * static_cast<double>(n);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform();
    const double skip = std::floor(std::log1p(-r) / log_q);
    w += 1 + static_cast<std::int64_t>(std::min(skip, total_pairs));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) g.add_edge(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
}

}  // namespace

Graph generate_er(std::size_t n, double p, RngStream& rng, ErSampler sampler) {
  check_er_args(n, p);
  Graph g(n);
  if (sampler == ErSampler::kAuto) {
    sampler = n <= kPairwiseNodeLimit ? ErSampler::kPairwise
                                      : ErSampler::kGeometricSkip;
  }
  if (sampler == ErSampler::kPairwise) {
    sample_pairwise(g, n, p, rng);
  } else {
    sample_geometric_skip(g, n, p, rng);
  }
  return g;
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed,
                  ErSampler sampler) {
  if (sampler == ErSampler::kAuto) {
    sampler = n <= kPairwiseNodeLimit ? ErSampler::kPairwise
                                      : ErSampler::kGeometricSkip;
  }
  RngStream rng(seed, sampler == ErSampler::kPairwise ? streams::kGraph
                                                      : streams::kGraphSkip);
  return generate_er(n, p, rng, sampler);
}

double connectivity_threshold(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidSize, "graph size must be at least 1");
  }
  const auto x = static_cast<double>(n);
  return std::log(x) / x;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidInput, "connectivity of an empty graph");
  }
  std::vector<bool> seen(n, false);
  std::vector<NodeId> frontier{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.back();
    frontier.pop_back();
    for (const NodeId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push_back(v);
      }
    }
  }
  return reached == n;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq;
  seq.degrees.reserve(g.num_nodes());
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    seq.degrees.push_back(g.degree(static_cast<NodeId>(i)));
  }
  return seq;
}

NodeId add_node_linked(Graph& g, NodeId anchor, std::size_t k_extra,
                       RngStream& rng) {
  if (!g.contains(anchor)) {
    throw Error(ErrorCode::kInvalidNode,
                "unknown anchor node " + std::to_string(anchor));
  }
  // Candidates are the existing nodes other than the anchor, addressed by a
  // dense index that skips over it.
  const std::size_t candidates = g.num_nodes() - 1;
  const auto to_node = [anchor](std::uint64_t index) {
    return static_cast<NodeId>(index < anchor ? index : index + 1);
  };

  std::vector<NodeId> extra;
  if (k_extra >= candidates) {
    extra.reserve(candidates);
    for (std::size_t i = 0; i < candidates; ++i) extra.push_back(to_node(i));
  } else {
    // Floyd's sampling: k draws, no rejection loop.
    std::unordered_set<std::uint64_t> picked;
    picked.reserve(k_extra * 2);
    for (std::size_t j = candidates - k_extra; j < candidates; ++j) {
      const std::uint64_t t = rng.uniform_index(j + 1);
      picked.insert(picked.contains(t) ? j : t);
    }
    extra.reserve(k_extra);
    for (const auto index : picked) extra.push_back(to_node(index));
    std::sort(extra.begin(), extra.end());
  }

  const NodeId added = g.add_node();
  g.add_edge(added, anchor);
  for (const NodeId v : extra) g.add_edge(added, v);
  return added;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "nodes=" + std::to_string(g.num_nodes()) + "\n";
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    for (const NodeId j : g.neighbors(static_cast<NodeId>(i))) {
      if (j > i) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace tumornet
