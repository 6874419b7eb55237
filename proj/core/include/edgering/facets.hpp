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

#include <cstdint>
#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"

namespace edgering {

/// Independent T with connected induced bipartite graph whose leftover
/// components all carry an odd cycle.
struct FundamentalSet {
  VertexSet vertices;
  VertexSet neighborhood;  // N_G(T)

  bool operator==(const FundamentalSet&) const = default;
};

enum class HyperplaneKind { kRegularVertex, kFundamental };

/// Supporting hyperplane of the edge cone, oriented so that the cone lies
/// in {x : functional(x) >= 0}.
struct Hyperplane {
  HyperplaneKind kind = HyperplaneKind::kRegularVertex;
  std::vector<std::int64_t> coefficients;
  Vertex vertex = 0;               // kRegularVertex only
  std::vector<VertexSet> sources;  // kFundamental: every T giving these coefficients

  std::int64_t evaluate(const LatticeVector& x) const { return dot(coefficients, x); }
  VertexSet fundamental_set() const { return sources.front(); }
  std::string describe(const Graph& g) const;
};

/// Generators lying on a hyperplane and the rank of the lattice they span.
struct Face {
  std::vector<std::size_t> edges;  // indices into Graph::edges()
  std::size_t dimension = 0;
};

/// Every component of G minus v carries an odd cycle.
bool is_regular_vertex(const Graph& g, Vertex v);
/// Direct evaluation of the three defining conditions.
bool is_fundamental_set(const Graph& g, VertexSet t);

/// Throws Disconnected, Bipartite.
VertexSet regular_vertices(const Graph& g);
/// Sorted by size, then lexicographically. Throws Disconnected.
std::vector<FundamentalSet> fundamental_sets(const Graph& g);

Hyperplane regular_vertex_hyperplane(const Graph& g, Vertex v);
Hyperplane fundamental_hyperplane(const Graph& g, VertexSet t);
/// Regular-vertex hyperplanes first (vertex order), then fundamental ones in
/// fundamental_sets order, deduplicated by coefficients. Throws Bipartite.
std::vector<Hyperplane> supporting_hyperplanes(const Graph& g);

Face face_of(const Graph& g, const Hyperplane& h);

/// The edge cone as the intersection of its supporting half-spaces.
class EdgeCone {
 public:
  explicit EdgeCone(const Graph& g);

  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t dimension() const { return dim_; }
  /// Throws DimensionMismatch.
  bool contains(const LatticeVector& x) const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

bool cone_contains(const Graph& g, const LatticeVector& x);

}  // namespace edgering
