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

#include <vector>

#include "tumornet/error.hpp"
#include "tumornet/graph.hpp"
#include "tumornet/metrics.hpp"

using namespace tumornet;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("volume_ratio") {
  CHECK(volume_ratio(complete(3)) == 1.0);
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(volume_ratio(path) == 0.75);
  CHECK(volume_ratio(Graph(5)) == 0.0);
  CHECK_THROWS_AS(volume_ratio(Graph()), Error);
  for (std::size_t n = 2; n < 12; ++n) {
    CHECK(volume_ratio(complete(n)) == doctest::Approx((n - 1) / 2.0));
  }
}

TEST_CASE("volume_ratio agrees with half the mean degree") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_er(200, 0.03, seed);
    const auto seq = degree_sequence(g);
    const double half_mean_degree = static_cast<double>(seq.degree_sum()) /
                                    (2.0 * static_cast<double>(g.num_nodes()));
    CHECK(volume_ratio(g) == doctest::Approx(half_mean_degree));
  }
}

TEST_CASE("algorithm2_volume") {
  const Graph tri = complete(3);
  SUBCASE("factor 1 gates at the first node with deg/K below 1") {
    const auto r = algorithm2_volume(tri, 4, 1.0);
    REQUIRE(r.has_value());
    CHECK(r->volume == 1.0);
    REQUIRE(r->gate_node.has_value());
    CHECK(*r->gate_node == 0);
  }
  SUBCASE("factor 0 never gates") {
    const auto r = algorithm2_volume(tri, 4, 0.0);
    REQUIRE(r.has_value());
    CHECK(r->volume == 1.0);
    CHECK_FALSE(r->gate_node.has_value());
  }
  SUBCASE("disconnected graph has no volume") {
    CHECK_FALSE(algorithm2_volume(Graph(3), 4, 1.0).has_value());
  }
  SUBCASE("gate picks the lowest id among low-degree nodes") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    const auto r = algorithm2_volume(g, 2, 1.0);
    REQUIRE(r.has_value());
    CHECK(*r->gate_node == 1);
    CHECK(r->volume == 0.75);
  }
}

TEST_CASE("spheroid_volume") {
  CHECK(spheroid_volume(2.0, 3.0) == 6.0);
  CHECK(spheroid_volume(0.0, 5.0) == 0.0);
  CHECK_THROWS_AS(spheroid_volume(-1.0, 2.0), Error);
}

TEST_CASE("tci_classify") {
  const std::vector<double> flat{1.0, 1.0};
  const std::vector<double> doubling{1.0, 2.0};
  const std::vector<double> halving{2.0, 1.0};
  CHECK(tci_classify(flat) == TciClass::kStabilization);
  CHECK(tci_classify(doubling) == TciClass::kProgression);
  CHECK(tci_classify(halving) == TciClass::kRejection);

  SUBCASE("band edges are stabilization") {
    CHECK(tci_classify(std::vector<double>{1.0, 1.05}) == TciClass::kStabilization);
    CHECK(tci_classify(std::vector<double>{1.0, 0.95}) == TciClass::kStabilization);
    CHECK(tci_classify(std::vector<double>{1.0, 1.2}) == TciClass::kProgression);
    CHECK(tci_classify(std::vector<double>{1.0, 1.2}, 0.5) ==
          TciClass::kStabilization);
  }
  SUBCASE("only endpoints matter") {
    CHECK(tci_classify(std::vector<double>{1.0, 9.0, 0.1, 1.0}) ==
          TciClass::kStabilization);
  }
  SUBCASE("scale invariance") {
    for (const double c : {1e-3, 0.5, 7.0, 1e6}) {
      for (const auto& s : {flat, doubling, halving}) {
        std::vector<double> scaled;
        for (const double v : s) scaled.push_back(v * c);
        CHECK(tci_classify(scaled) == tci_classify(s));
      }
    }
  }
  SUBCASE("invalid series") {
    CHECK_THROWS_AS(tci_classify(std::vector<double>{1.0}), Error);
    CHECK_THROWS_AS(tci_classify(std::vector<double>{0.0, 1.0}), Error);
  }
  CHECK(to_string(TciClass::kProgression) == "progression");
  CHECK(to_string(TciClass::kRejection) == "rejection");
  CHECK(to_string(TciClass::kStabilization) == "stabilization");
}

TEST_CASE("degree_histogram") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  const DegreeHistogram h = degree_histogram(g);
  CHECK(h == DegreeHistogram{{1, 3}, {3, 1}});
  CHECK(degree_histogram(Graph(3)) == DegreeHistogram{{0, 3}});

  const Graph er = generate_er(300, 0.02, 4);
  std::size_t nodes = 0;
  std::size_t stubs = 0;
  for (const auto& [deg, count] : degree_histogram(er)) {
    nodes += count;
    stubs += deg * count;
  }
  CHECK(nodes == 300);
  CHECK(stubs == 2 * er.num_edges());
}
