// Copyright 2026 The edgering Authors.
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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "edgering/error.hpp"
#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"
#include "edgering/hole_families.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace {

using namespace edgering;
using th::fixture;
using th::set;

bool has_fundamental(const Graph& g, VertexSet t) {
  for (const auto& f : fundamental_sets(g)) {
    if (f.vertices == t) return true;
  }
  return false;
}

TEST(RegularVertices, Bowtie) {
  const Graph& g = fixture("BOWTIE");
  EXPECT_EQ(regular_vertices(g), set(g, {"v2", "v3", "v4", "v5"}));
}

TEST(RegularVertices, T1min) {
  const Graph& g = fixture("T1MIN");
  EXPECT_EQ(regular_vertices(g), set(g, {"w", "x2", "x4", "y1_1", "y1_2", "y3_1", "y3_2"}));
  EXPECT_FALSE(is_regular_vertex(g, g.index_of("x1")));
}

TEST(RegularVertices, T2minHubIsNotRegular) {
  const Graph& g = fixture("T2MIN");
  EXPECT_FALSE(regular_vertices(g).contains(g.index_of("w")));
}

TEST(RegularVertices, Preconditions) {
  EXPECT_THROW(regular_vertices(th::cycle_graph(4)), Error);
  EXPECT_THROW(fundamental_sets(Graph::from_edges({"a", "b"}, {})), Error);
}

TEST(FundamentalSets, BowtieSingletons) {
  const Graph& g = fixture("BOWTIE");
  std::vector<VertexSet> singles;
  for (const auto& t : fundamental_sets(g)) {
    if (t.vertices.size() == 1) singles.push_back(t.vertices);
  }
  EXPECT_EQ(singles, std::vector<VertexSet>{set(g, {"v1"})});
}

TEST(FundamentalSets, Examples) {
  const Graph& t1 = fixture("T1MIN");
  EXPECT_TRUE(has_fundamental(t1, set(t1, {"x2", "y1_1"})));
  EXPECT_FALSE(has_fundamental(t1, set(t1, {"x2"})));
  EXPECT_EQ(fundamental_sets(t1).size(), 23u);
  const Graph& t2 = fixture("T2MIN");
  EXPECT_TRUE(has_fundamental(t2, set(t2, {"x5"})));
  EXPECT_TRUE(has_fundamental(t2, set(t2, {"x6"})));
  EXPECT_EQ(fundamental_sets(t2).size(), 40u);
}

TEST(FundamentalSets, NeighbourhoodRecorded) {
  const Graph& g = fixture("T2MIN");
  for (const auto& t : fundamental_sets(g)) {
    EXPECT_EQ(t.neighborhood, neighbors_of_set(g, t.vertices));
  }
}

TEST(SupportingHyperplanes, Bowtie) {
  const Graph& g = fixture("BOWTIE");
  const auto hs = supporting_hyperplanes(g);
  std::size_t regular = 0;
  bool saw_v1 = false;
  for (const auto& h : hs) {
    if (h.kind == HyperplaneKind::kRegularVertex) ++regular;
    if (h.kind == HyperplaneKind::kFundamental && h.fundamental_set() == set(g, {"v1"})) {
      saw_v1 = true;
      EXPECT_EQ(h.coefficients, (std::vector<std::int64_t>{-1, 1, 1, 1, 1}));
      EXPECT_EQ(h.describe(g), "H_T{v1}");
    }
  }
  EXPECT_EQ(regular, 4u);
  EXPECT_TRUE(saw_v1);
}

TEST(SupportingHyperplanes, T2minHasNoHubHyperplane) {
  const Graph& g = fixture("T2MIN");
  for (const auto& h : supporting_hyperplanes(g)) {
    EXPECT_FALSE(h.kind == HyperplaneKind::kRegularVertex && h.vertex == g.index_of("w"));
  }
}

TEST(ConeContains, T1min) {
  const Graph& g = fixture("T1MIN");
  EXPECT_TRUE(cone_contains(g, th::rho(g, "w", "x1")));
  EXPECT_FALSE(cone_contains(g, -1 * LatticeVector::unit(9, g.index_of("w"))));
  EXPECT_TRUE(cone_contains(g, th::indicator(g, {"x1", "y1_1", "y1_2", "x3", "y3_1", "y3_2"})));
  EXPECT_THROW(cone_contains(g, LatticeVector(3)), Error);
}

TEST(FaceOf, HubFacetOfT1min) {
  const Graph& g = fixture("T1MIN");
  const Face f = face_of(g, regular_vertex_hyperplane(g, g.index_of("w")));
  EXPECT_EQ(f.edges.size(), 8u);
  EXPECT_EQ(f.dimension, 8u);
}

TEST(FaceOf, BowtieSingletonFacet) {
  // Only the four edges at v1 vanish on this functional; edges v2v3 and
  // v4v5 evaluate to 2.
  const Graph& g = fixture("BOWTIE");
  const Face f = face_of(g, fundamental_hyperplane(g, set(g, {"v1"})));
  EXPECT_EQ(f.edges.size(), 4u);
  EXPECT_EQ(f.dimension, 4u);
}

TEST(FaceOf, NoVanishingGenerator) {
  const Graph& g = fixture("TRIANGLE");
  Hyperplane h;
  h.kind = HyperplaneKind::kFundamental;
  h.coefficients = {1, 1, 1};
  h.sources = {VertexSet{0}};
  const Face f = face_of(g, h);
  EXPECT_TRUE(f.edges.empty());
  EXPECT_EQ(f.dimension, 0u);
}

// Property tests on every fixture and on random non-bipartite graphs.

void check_definitions(const Graph& g) {
  EXPECT_EQ(regular_vertices(g).bits(), oracle::regular_vertices(g));
  std::vector<std::uint64_t> got;
  for (const auto& t : fundamental_sets(g)) got.push_back(t.vertices.bits());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, oracle::fundamental_sets(g));
}

TEST(FacetProperties, DefinitionsMatchBruteForceOnFixtures) {
  for (const auto& [name, g] : th::fixtures().all()) {
    SCOPED_TRACE(name);
    check_definitions(g);
  }
}

TEST(FacetProperties, DefinitionsMatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 120) {
    const Graph g = gen::connected_graph(rng, 3 + checked % 9, 0.25);
    if (is_bipartite(g)) continue;
    check_definitions(g);
    ++checked;
  }
}

void check_facets(const Graph& g) {
  const std::size_t d = g.vertex_count();
  for (const auto& h : supporting_hyperplanes(g)) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const Edge& e : g.edges()) {
      const auto value = h.evaluate(rho(d, e));
      EXPECT_GE(value, 0) << h.describe(g);
      if (value == 0) rows.push_back(rho(d, e).coords());
    }
    const Face f = face_of(g, h);
    EXPECT_EQ(f.edges.size(), rows.size());
    EXPECT_EQ(f.dimension, oracle::rank(rows));
    EXPECT_EQ(f.dimension, d - 1) << h.describe(g);
  }
}

TEST(FacetProperties, FacetsHaveCodimensionOneOnFixtures) {
  for (const auto& [name, g] : th::fixtures().all()) {
    SCOPED_TRACE(name);
    check_facets(g);
  }
}

TEST(FacetProperties, FacetsHaveCodimensionOneOnRandomGraphs) {
  std::mt19937_64 rng(32);
  int checked = 0;
  while (checked < 80) {
    const Graph g = gen::connected_graph(rng, 3 + checked % 8, 0.3);
    if (is_bipartite(g)) continue;
    check_facets(g);
    ++checked;
  }
}

TEST(FacetProperties, ConeMembershipOfSemigroupElements) {
  std::mt19937_64 rng(33);
  const Graph& g = fixture("T2MIN");
  const EdgeCone cone(g);
  EXPECT_EQ(cone.dimension(), 11u);
  std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    LatticeVector x(g.vertex_count());
    for (int k = 0; k < 1 + trial % 7; ++k) x += rho(g.vertex_count(), g.edges()[pick(rng)]);
    EXPECT_TRUE(cone.contains(x));
  }
}

// Hub-free fundamental sets of diameter-4 cacti are unions of building
// blocks, and every block is itself fundamental.
void check_building_blocks(const Graph& g) {
  const CactusType type = classify(g);
  ASSERT_TRUE(type.in_class());
  const auto blocks = fundamental_building_blocks(type);
  ASSERT_FALSE(blocks.empty());
  for (VertexSet b : blocks) EXPECT_TRUE(is_fundamental_set(g, b)) << g.set_label(b);
  const Vertex w = type.layout->w;
  for (const auto& t : fundamental_sets(g)) {
    if (t.vertices.contains(w)) continue;
    EXPECT_TRUE(is_union_of_blocks(t.vertices, blocks)) << g.set_label(t.vertices);
  }
}

TEST(FacetProperties, BuildingBlockClosure) {
  for (const char* name : {"T1MIN", "T2MIN", "N4A", "N4B"}) {
    SCOPED_TRACE(name);
    check_building_blocks(fixture(name));
  }
}

TEST(FacetProperties, BuildingBlockClosureOnRandomCacti) {
  std::mt19937_64 rng(34);
  int checked = 0;
  while (checked < 25) {
    const Graph g = build_triangular_cactus(gen::cactus_spec(rng, 4, 17));
    if (!classify(g).in_class()) continue;
    check_building_blocks(g);
    ++checked;
  }
}

TEST(FacetProperties, HubInNeighbourhoodForHubSideBlocks) {
  for (const char* name : {"T1MIN", "T2MIN", "N4A", "N4B"}) {
    const Graph& g = fixture(name);
    const CactusType type = classify(g);
    VertexSet hub_side;
    for (Vertex x : type.layout->x) hub_side.insert(x);
    for (VertexSet b : fundamental_building_blocks(type)) {
      if (b.intersects(hub_side)) {
        EXPECT_TRUE(neighbors_of_set(g, b).contains(type.layout->w)) << g.set_label(b);
      }
    }
  }
}

}  // namespace
