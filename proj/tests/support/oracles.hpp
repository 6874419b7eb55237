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

// Slow, independent re-derivations used to cross-check the library. They
// only touch Graph's adjacency accessors and raw bitmasks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"

namespace oracle {

using edgering::Graph;
using Mask = std::uint64_t;

inline std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline std::vector<Mask> components(const Graph& g, Mask within) {
  const auto adj = adjacency(g);
  std::vector<Mask> out;
  Mask left = within;
  while (left) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (frontier >> v & 1) next |= adj[v];
      }
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

// Two-colouring by repeated relaxation.
inline bool bipartite(const Graph& g, Mask within) {
  const auto adj = adjacency(g);
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (!(within >> s & 1) || colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (!(within >> u & 1) || !(adj[v] >> u & 1)) continue;
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline int floyd_warshall_diameter(const Graph& g) {
  const std::size_t d = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> dist(d, std::vector<int>(d, inf));
  for (std::size_t i = 0; i < d; ++i) dist[i][i] = 0;
  for (const auto& e : g.edges()) dist[e.u][e.v] = dist[e.v][e.u] = 1;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  int best = 0;
  for (const auto& row : dist)
    for (int x : row) best = std::max(best, x);
  return best;
}

inline Mask all(const Graph& g) {
  return g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
}

inline Mask cutpoints(const Graph& g) {
  const std::size_t base = components(g, all(g)).size();
  Mask out = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (components(g, all(g) & ~(Mask{1} << v)).size() > base) out |= Mask{1} << v;
  }
  return out;
}

// Vertex sets inducing a chordless odd cycle: connected, every vertex has
// exactly two neighbours inside the set.
inline std::vector<Mask> chordless_odd_cycles(const Graph& g) {
  const auto adj = adjacency(g);
  std::vector<Mask> out;
  for (Mask s = 1; s <= all(g); ++s) {
    const int k = popcount(s);
    if (k < 3 || k % 2 == 0) continue;
    bool ok = true;
    for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) {
      if (s >> v & 1) ok = popcount(adj[v] & s) == 2;
    }
    if (ok && components(g, s).size() == 1) out.push_back(s);
  }
  return out;
}

inline bool every_component_odd(const Graph& g, Mask within) {
  for (Mask c : components(g, within)) {
    if (bipartite(g, c)) return false;
  }
  return true;
}

inline Mask regular_vertices(const Graph& g) {
  Mask out = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (every_component_odd(g, all(g) & ~(Mask{1} << v))) out |= Mask{1} << v;
  }
  return out;
}

inline Mask neighbourhood(const Graph& g, Mask t) {
  const auto adj = adjacency(g);
  Mask n = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (t >> v & 1) n |= adj[v];
  }
  return n;
}

// Connectivity of the bipartite graph with edges between T and N(T).
inline bool bipartite_part_connected(const Graph& g, Mask t) {
  const auto adj = adjacency(g);
  const Mask n = neighbourhood(g, t);
  const Mask universe = t | n;
  Mask seen = t & (~t + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!(seen >> v & 1)) continue;
      Mask reach = (t >> v & 1) ? (adj[v] & n) : (adj[v] & t);
      if (reach & ~seen) {
        seen |= reach;
        grew = true;
      }
    }
  }
  return seen == universe;
}

inline bool is_fundamental(const Graph& g, Mask t) {
  if (t == 0) return false;
  if (neighbourhood(g, t) & t) return false;
  if (!bipartite_part_connected(g, t)) return false;
  const Mask rest = all(g) & ~(t | neighbourhood(g, t));
  return every_component_odd(g, rest);
}

inline std::vector<Mask> fundamental_sets(const Graph& g) {
  std::vector<Mask> out;
  for (Mask t = 1; t <= all(g); ++t) {
    if (is_fundamental(g, t)) out.push_back(t);
  }
  return out;
}

// Rank over Q by fraction-free elimination.
inline std::size_t rank(std::vector<std::vector<std::int64_t>> rows) {
  std::vector<std::vector<__int128>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const __int128 a = m[r][c], b = m[i][c];
      __int128 g = 0;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = m[i][j] * a - m[r][j] * b;
        __int128 x = m[i][j] < 0 ? -m[i][j] : m[i][j];
        __int128 y = g;
        while (y) {
          __int128 t = x % y;
          x = y;
          y = t;
        }
        g = x;
      }
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j) m[i][j] /= g;
    }
    ++r;
  }
  return r;
}

// x lies in the lattice spanned by rho(e), e in `edges`, iff it vanishes off
// the covered vertices and, per component of the edge subgraph, the two
// colour classes balance (bipartite) or the coordinate sum is even.
inline bool in_edge_lattice(const Graph& g, const std::vector<std::size_t>& edges,
                            const edgering::LatticeVector& x) {
  const std::size_t d = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(d);
  Mask covered = 0;
  for (std::size_t i : edges) {
    const auto& e = g.edges()[i];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    covered |= (Mask{1} << e.u) | (Mask{1} << e.v);
  }
  for (std::size_t v = 0; v < d; ++v) {
    if (!(covered >> v & 1) && x[v] != 0) return false;
  }
  std::vector<int> colour(d, -1);
  for (std::size_t s = 0; s < d; ++s) {
    if (!(covered >> s & 1) || colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    std::int64_t side[2] = {0, 0};
    bool bip = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      side[colour[v]] += x[v];
      for (auto u : adj[v]) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          bip = false;
        }
      }
    }
    if (bip ? side[0] != side[1] : (side[0] + side[1]) % 2 != 0) return false;
  }
  return true;
}

// All elements of S_G with degree <= max_degree, by breadth-first closure.
inline std::set<std::vector<std::int64_t>> semigroup_ball(const Graph& g, int max_degree) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> layer{std::vector<std::int64_t>(g.vertex_count(), 0)};
  seen.insert(layer[0]);
  for (int deg = 2; deg <= max_degree; deg += 2) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : layer) {
      for (const auto& e : g.edges()) {
        auto w = v;
        ++w[e.u];
        ++w[e.v];
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  return seen;
}

}  // namespace oracle
