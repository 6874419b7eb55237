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

#include "edgering/facets.hpp"

#include <algorithm>
#include <unordered_set>

#include "edgering/error.hpp"

namespace edgering {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, what);
}

void require_odd_cycle(const Graph& g, const char* what) {
  require_connected(g, what);
  if (is_bipartite(g)) throw Error(ErrorCode::kBipartite, what);
}

bool every_component_odd(const Graph& g, VertexSet within) {
  for (VertexSet c : components(g, within)) {
    if (is_bipartite(g, c)) return false;
  }
  return true;
}

}  // namespace

std::string Hyperplane::describe(const Graph& g) const {
  if (kind == HyperplaneKind::kRegularVertex) return "H_" + g.label(vertex);
  return "H_T" + g.set_label(fundamental_set());
}

bool is_regular_vertex(const Graph& g, Vertex v) {
  return every_component_odd(g, g.vertices() - VertexSet{v});
}

bool is_fundamental_set(const Graph& g, VertexSet t) {
  if (t.empty() || !is_independent(g, t)) return false;
  if (!bipartite_induced_connected(g, t)) return false;
  const VertexSet rest = g.vertices() - t - neighbors_of_set(g, t);
  return rest.empty() || every_component_odd(g, rest);
}

VertexSet regular_vertices(const Graph& g) {
  require_odd_cycle(g, "regular_vertices");
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_regular_vertex(g, v)) out.insert(v);
  }
  return out;
}

std::vector<FundamentalSet> fundamental_sets(const Graph& g) {
  require_connected(g, "fundamental_sets");
  // Grow independent sets whose induced bipartite graph stays connected: a
  // vertex may join T only if it shares a neighbour with T and is not
  // adjacent to it. Every such set is reachable by single additions.
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> stack;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    stack.push_back(VertexSet{v});
    seen.insert(VertexSet{v}.bits());
  }
  std::vector<FundamentalSet> out;
  while (!stack.empty()) {
    VertexSet t = stack.back();
    stack.pop_back();
    const VertexSet n = neighbors_of_set(g, t);
    const VertexSet rest = g.vertices() - t - n;
    if (rest.empty() || every_component_odd(g, rest)) out.push_back({t, n});
    VertexSet second = neighbors_of_set(g, n) - t - n;
    second.for_each([&](Vertex v) {
      VertexSet grown = t | VertexSet{v};
      if (seen.insert(grown.bits()).second) stack.push_back(grown);
    });
  }
  std::sort(out.begin(), out.end(),
            [](const FundamentalSet& a, const FundamentalSet& b) { return a.vertices < b.vertices; });
  return out;
}

Hyperplane regular_vertex_hyperplane(const Graph& g, Vertex v) {
  Hyperplane h;
  h.kind = HyperplaneKind::kRegularVertex;
  h.coefficients.assign(g.vertex_count(), 0);
  h.coefficients[v] = 1;
  h.vertex = v;
  return h;
}

Hyperplane fundamental_hyperplane(const Graph& g, VertexSet t) {
  Hyperplane h;
  h.kind = HyperplaneKind::kFundamental;
  h.coefficients.assign(g.vertex_count(), 0);
  neighbors_of_set(g, t).for_each([&](Vertex v) { h.coefficients[v] += 1; });
  t.for_each([&](Vertex v) { h.coefficients[v] -= 1; });
  h.sources.push_back(t);
  return h;
}

std::vector<Hyperplane> supporting_hyperplanes(const Graph& g) {
  std::vector<Hyperplane> out;
  regular_vertices(g).for_each(
      [&](Vertex v) { out.push_back(regular_vertex_hyperplane(g, v)); });
  for (const FundamentalSet& f : fundamental_sets(g)) {
    Hyperplane h = fundamental_hyperplane(g, f.vertices);
    auto same = std::find_if(out.begin(), out.end(), [&](const Hyperplane& o) {
      return o.coefficients == h.coefficients;
    });
    if (same == out.end()) {
      out.push_back(std::move(h));
    } else {
      same->sources.push_back(f.vertices);
    }
  }
  return out;
}

Face face_of(const Graph& g, const Hyperplane& h) {
  const std::size_t d = g.vertex_count();
  Face face;
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    LatticeVector r = rho(d, g.edges()[i]);
    if (h.evaluate(r) == 0) {
      face.edges.push_back(i);
      gens.push_back(std::move(r));
    }
  }
  face.dimension = IntegerLattice(d, gens).rank();
  return face;
}

EdgeCone::EdgeCone(const Graph& g)
    : dim_(g.vertex_count()), hyperplanes_(supporting_hyperplanes(g)) {}

bool EdgeCone::contains(const LatticeVector& x) const {
  if (x.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "cone membership");
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(),
                     [&](const Hyperplane& h) { return h.evaluate(x) >= 0; });
}

bool cone_contains(const Graph& g, const LatticeVector& x) {
  return EdgeCone(g).contains(x);
}

}  // namespace edgering
