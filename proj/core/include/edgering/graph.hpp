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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgering/vertex_set.hpp"

namespace edgering {

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph. Vertices carry opaque labels; their
/// order at construction is the canonical order every vector indexes by.
/// Immutable once built.
class Graph {
 public:
  /// Duplicate edges collapse to one; loops and unknown endpoints throw.
  static Graph from_edges(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws UnknownEndpoint.
  Vertex index_of(std::string_view label) const;

  /// Edges in insertion order (first occurrence), endpoints normalized u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].contains(b); }
  VertexSet vertices() const { return VertexSet::all(vertex_count()); }

  std::string edge_label(const Edge& e) const {
    return labels_[e.u] + "-" + labels_[e.v];
  }
  std::string set_label(VertexSet s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

/// Chordless cycle with vertices in cyclic order. Canonical rotation puts
/// the smallest vertex first and the smaller of its two cycle neighbours
/// second.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  VertexSet vertex_set() const { return VertexSet::from(vertices); }

  bool operator==(const Cycle&) const = default;
  auto operator<=>(const Cycle&) const = default;
};

/// Parameters of a triangular cactus built around a hub w: n triangles
/// through w and s[i] further triangles hanging off x_{i+1}.
struct CactusSpec {
  int n = 0;
  std::vector<int> s;
};

/// The hub labeling of a diameter-4 triangular cactus recovered from an
/// arbitrary vertex order. x holds the 2n neighbours of w with x[2k] and
/// x[2k+1] forming a triangle with w; y[i] holds the 2 s_i outer vertices
/// attached to x[i], consecutive entries forming a triangle with x[i].
struct CactusLayout {
  Vertex w = 0;
  std::vector<Vertex> x;
  std::vector<std::vector<Vertex>> y;

  std::size_t n() const { return x.size() / 2; }
  std::size_t s(std::size_t i) const { return y[i].size() / 2; }
  /// The triangle partner of x[i] through w.
  Vertex partner(std::size_t i) const { return x[i ^ 1U]; }
};

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted
  VertexSet cutpoints;
};

Graph build_triangular_cactus(const CactusSpec& spec);

bool is_connected(const Graph& g);
/// Connected components of the subgraph induced on `within`, sorted by
/// their smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
/// True if the subgraph induced on `within` has no odd cycle.
bool is_bipartite(const Graph& g, VertexSet within);
bool is_bipartite(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
/// Throws Disconnected.
int diameter(const Graph& g);

BlockDecomposition blocks_and_cutpoints(const Graph& g);

/// Throws Disconnected.
bool is_triangular_cactus(const Graph& g);

/// Every chordless cycle whose length is odd, each once, sorted.
/// `max_length` of 0 means unbounded.
std::vector<Cycle> minimal_odd_cycles(const Graph& g, std::size_t max_length = 0);
std::vector<Cycle> chordless_cycles(const Graph& g, std::size_t max_length = 0);

VertexSet neighbors_of_set(const Graph& g, VertexSet t);
/// Throws EmptySet.
bool is_independent(const Graph& g, VertexSet t);
/// Connectivity of the bipartite graph with parts T and N(T) and the
/// edges of g running between them. Throws EmptySet.
bool bipartite_induced_connected(const Graph& g, VertexSet t);

/// Recovers the hub labeling when g is a triangular cactus of diameter 4,
/// nullopt otherwise. Throws AmbiguousCenter if no unique hub exists.
std::optional<CactusLayout> cactus_layout(const Graph& g);

}  // namespace edgering
