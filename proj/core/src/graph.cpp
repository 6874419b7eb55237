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

#include "edgering/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "edgering/error.hpp"

namespace edgering {

Graph Graph::from_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  if (labels.size() > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                std::to_string(labels.size()) + " vertices, at most " +
                    std::to_string(kMaxVertices) + " supported");
  }
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (!index.emplace(labels[v], v).second) {
      throw Error(ErrorCode::kDuplicateVertex, labels[v]);
    }
  }
  Graph g;
  g.labels_ = std::move(labels);
  g.adjacency_.assign(g.labels_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::kUnknownEndpoint, a);
    if (ib == index.end()) throw Error(ErrorCode::kUnknownEndpoint, b);
    if (ia->second == ib->second) throw Error(ErrorCode::kLoopEdge, a);
    Vertex u = std::min(ia->second, ib->second);
    Vertex v = std::max(ia->second, ib->second);
    if (g.adjacency_[u].contains(v)) continue;
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
    g.edges_.push_back({u, v});
  }
  return g;
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return Vertex(it - labels_.begin());
}

Vertex Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorCode::kUnknownEndpoint, std::string(label));
  return *v;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count() || !adjacent(a, b)) {
    return std::nullopt;
  }
  Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::find(edges_.begin(), edges_.end(), e);
  return std::size_t(it - edges_.begin());
}

std::string Graph::set_label(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += labels_[v];
    first = false;
  });
  return out + "}";
}

Graph build_triangular_cactus(const CactusSpec& spec) {
  if (spec.n <= 0) throw Error(ErrorCode::kEmptySpec, "n must be positive");
  if (spec.s.size() != std::size_t(2 * spec.n)) {
    throw Error(ErrorCode::kEmptySpec, "s must list 2n entries");
  }
  for (int si : spec.s) {
    if (si < 0) throw Error(ErrorCode::kEmptySpec, "s entries must be nonnegative");
  }
  auto x = [](int i) { return "x" + std::to_string(i); };
  auto y = [](int i, int k) {
    return "y" + std::to_string(i) + "_" + std::to_string(k);
  };
  std::vector<std::string> labels{"w"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= 2 * spec.n; ++i) labels.push_back(x(i));
  for (int k = 1; k <= spec.n; ++k) {
    edges.emplace_back("w", x(2 * k - 1));
    edges.emplace_back("w", x(2 * k));
    edges.emplace_back(x(2 * k - 1), x(2 * k));
  }
  for (int i = 1; i <= 2 * spec.n; ++i) {
    for (int t = 1; t <= spec.s[i - 1]; ++t) {
      labels.push_back(y(i, 2 * t - 1));
      labels.push_back(y(i, 2 * t));
      edges.emplace_back(x(i), y(i, 2 * t - 1));
      edges.emplace_back(x(i), y(i, 2 * t));
      edges.emplace_back(y(i, 2 * t - 1), y(i, 2 * t));
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

namespace {

VertexSet reach(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex u) { next |= g.neighbors(u); });
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reach(g, rest.first(), within);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && components(g, g.vertices()).size() == 1;
}

bool is_bipartite(const Graph& g, VertexSet within) {
  std::vector<int> color(g.vertex_count(), -1);
  for (const VertexSet& comp : components(g, within)) {
    Vertex root = comp.first();
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      bool clash = false;
      (g.neighbors(u) & within).for_each([&](Vertex v) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) { return is_bipartite(g, g.vertices()); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "diameter");
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

BlockDecomposition blocks_and_cutpoints(const Graph& g) {
  // Hopcroft-Tarjan over an explicit edge stack.
  const std::size_t d = g.vertex_count();
  std::vector<int> disc(d, -1), low(d, 0);
  std::vector<Edge> stack;
  BlockDecomposition out;
  int timer = 0;

  std::function<void(Vertex, int)> visit = [&](Vertex u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    g.neighbors(u).for_each([&](Vertex v) {
      if (disc[v] < 0) {
        ++children;
        stack.push_back({u, v});
        visit(v, int(u));
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent >= 0 || children > 1) out.cutpoints.insert(u);
          VertexSet block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e.u == u && e.v == v) break;
          }
          out.blocks.push_back(block);
        }
      } else if (int(v) != parent && disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    });
  };

  for (Vertex v = 0; v < d; ++v) {
    if (disc[v] < 0) visit(v, -1);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); });
  return out;
}

bool is_triangular_cactus(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "is_triangular_cactus");
  auto bd = blocks_and_cutpoints(g);
  if (bd.blocks.empty()) return false;
  for (VertexSet b : bd.blocks) {
    if (b.size() != 3) return false;
    std::size_t inner = 0;
    b.for_each([&](Vertex v) { inner += (g.neighbors(v) & b).size(); });
    if (inner != 6) return false;
  }
  return true;
}

std::vector<Cycle> chordless_cycles(const Graph& g, std::size_t max_length) {
  // Each cycle is grown from its smallest vertex s along vertices > s; a
  // new vertex may touch the path only at its tip (and at s when closing).
  std::vector<Cycle> out;
  const std::size_t d = g.vertex_count();
  std::vector<Vertex> path;
  std::function<void(Vertex, VertexSet, VertexSet)> extend =
      [&](Vertex s, VertexSet on_path, VertexSet interior) {
        Vertex tip = path.back();
        VertexSet candidates = g.neighbors(tip) - on_path;
        candidates.for_each([&](Vertex v) {
          if (v < s) return;
          if (g.neighbors(v).intersects(interior)) return;
          if (g.adjacent(v, s)) {
            if (path[1] < v && (max_length == 0 || path.size() + 1 <= max_length)) {
              Cycle c{path};
              c.vertices.push_back(v);
              out.push_back(std::move(c));
            }
            return;
          }
          if (max_length != 0 && path.size() + 1 >= max_length) return;
          path.push_back(v);
          VertexSet next_interior = interior;
          next_interior.insert(tip);
          extend(s, on_path | VertexSet{v}, next_interior);
          path.pop_back();
        });
      };
  for (Vertex s = 0; s < d; ++s) {
    g.neighbors(s).for_each([&](Vertex first) {
      if (first < s) return;
      path = {s, first};
      // Interior excludes s so that closing edges back to s are allowed.
      extend(s, VertexSet{s, first}, VertexSet{});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> minimal_odd_cycles(const Graph& g, std::size_t max_length) {
  std::vector<Cycle> out;
  for (Cycle& c : chordless_cycles(g, max_length)) {
    if (c.length() % 2 == 1) out.push_back(std::move(c));
  }
  return out;
}

VertexSet neighbors_of_set(const Graph& g, VertexSet t) {
  VertexSet out;
  t.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

bool is_independent(const Graph& g, VertexSet t) {
  if (t.empty()) throw Error(ErrorCode::kEmptySet, "is_independent");
  return !neighbors_of_set(g, t).intersects(t);
}

bool bipartite_induced_connected(const Graph& g, VertexSet t) {
  if (t.empty()) throw Error(ErrorCode::kEmptySet, "bipartite_induced_connected");
  const VertexSet n = neighbors_of_set(g, t);
  const VertexSet all = t | n;
  // Only T-N edges count: alternate sides on every step.
  VertexSet seen{t.first()};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex u) {
      VertexSet across = t.contains(u) ? (g.neighbors(u) & n) : (g.neighbors(u) & t);
      next |= across;
    });
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

std::optional<CactusLayout> cactus_layout(const Graph& g) {
  if (!is_connected(g) || !is_triangular_cactus(g) || diameter(g) != 4) {
    return std::nullopt;
  }
  const std::size_t d = g.vertex_count();
  std::vector<Vertex> centers;
  std::vector<int> from_w;
  for (Vertex v = 0; v < d; ++v) {
    auto dist = bfs_distances(g, v);
    if (*std::max_element(dist.begin(), dist.end()) == 2) {
      centers.push_back(v);
      from_w = dist;
    }
  }
  if (centers.size() != 1) {
    throw Error(ErrorCode::kAmbiguousCenter,
                std::to_string(centers.size()) + " vertices of eccentricity 2");
  }
  CactusLayout layout;
  layout.w = centers.front();
  const VertexSet ring = g.neighbors(layout.w);
  VertexSet pending = ring;
  while (!pending.empty()) {
    Vertex a = pending.first();
    VertexSet partner = g.neighbors(a) & ring;
    if (partner.size() != 1) {
      throw Error(ErrorCode::kAmbiguousCenter, "hub neighbour without a unique partner");
    }
    layout.x.push_back(a);
    layout.x.push_back(partner.first());
    pending -= VertexSet{a, partner.first()};
  }
  std::size_t covered = 1 + layout.x.size();
  for (Vertex xi : layout.x) {
    VertexSet outer = g.neighbors(xi) - ring - VertexSet{layout.w};
    std::vector<Vertex> group;
    while (!outer.empty()) {
      Vertex a = outer.first();
      VertexSet partner = g.neighbors(a) & outer;
      if (partner.size() != 1 || from_w[a] != 2) {
        throw Error(ErrorCode::kAmbiguousCenter, "outer triangle is malformed");
      }
      group.push_back(a);
      group.push_back(partner.first());
      outer -= VertexSet{a, partner.first()};
    }
    covered += group.size();
    layout.y.push_back(std::move(group));
  }
  if (covered != d) {
    throw Error(ErrorCode::kAmbiguousCenter, "vertices outside the hub structure");
  }
  return layout;
}

}  // namespace edgering
