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

#include "edgering/exceptional.hpp"

#include <algorithm>

#include "edgering/error.hpp"

namespace edgering {

LatticeVector cycle_vector(std::size_t d, const Cycle& c) {
  return LatticeVector::indicator(d, c.vertex_set());
}

LatticeVector pair_vector(std::size_t d, const ExceptionalPair& p) {
  return cycle_vector(d, p.first) + cycle_vector(d, p.second);
}

bool is_exceptional(const Graph& g, const Cycle& a, const Cycle& b) {
  const VertexSet va = a.vertex_set();
  const VertexSet vb = b.vertex_set();
  if (va.intersects(vb)) return false;
  return !neighbors_of_set(g, va).intersects(vb);
}

std::vector<ExceptionalPair> exceptional_pairs(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "exceptional_pairs");
  const auto cycles = minimal_odd_cycles(g);
  std::vector<ExceptionalPair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (is_exceptional(g, cycles[i], cycles[j])) out.push_back({cycles[i], cycles[j]});
    }
  }
  return out;
}

bool odd_cycle_condition(const Graph& g) { return exceptional_pairs(g).empty(); }

bool is_normal(const Graph& g) { return odd_cycle_condition(g); }

std::string_view to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::kPairSum: return "pair_sum";
    case Lemma::kEdgeAugment: return "edge_augment";
    case Lemma::kDoubleHubEdge: return "double_w_edge";
  }
  return "unknown";
}

namespace {

CactusLayout require_cactus(const Graph& g) {
  auto layout = is_connected(g) ? cactus_layout(g) : std::nullopt;
  if (!layout) {
    throw Error(ErrorCode::kNotTriangularCactusDiam4,
                "closed forms hold only for triangular cacti of diameter 4");
  }
  return *layout;
}

void require_exceptional(const Graph& g, const ExceptionalPair& p) {
  if (!is_exceptional(g, p.first, p.second)) {
    throw Error(ErrorCode::kPreconditionViolated, "pair is not exceptional");
  }
}

bool pair_sum_closed_form(const Graph& g, const ExceptionalPair& p1, const ExceptionalPair& p2) {
  auto plain = [&](const Cycle& a, const Cycle& b) { return !is_exceptional(g, a, b); };
  return (plain(p1.first, p2.first) && plain(p1.second, p2.second)) ||
         (plain(p1.first, p2.second) && plain(p1.second, p2.first));
}

// V(C) u V(C') u N(V(C) u V(C')).
VertexSet closed_neighbourhood(const Graph& g, const ExceptionalPair& p) {
  return p.vertex_set() | neighbors_of_set(g, p.vertex_set());
}

bool edge_augment_closed_form(const Graph& g, const CactusLayout& layout,
                              const ExceptionalPair& p, Vertex u, Vertex v) {
  const VertexSet near = closed_neighbourhood(g, p);
  return (u == layout.w && near.contains(v)) || (v == layout.w && near.contains(u));
}

void require_double_w_args(const Graph& g, const CactusLayout& layout,
                           const ExceptionalPair& p, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, layout.w) ||
      !g.adjacent(v, layout.w)) {
    throw Error(ErrorCode::kPreconditionViolated, "u and v must both be hub neighbours");
  }
  const VertexSet near = closed_neighbourhood(g, p);
  if (near.contains(u) || near.contains(v)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "u or v lies in the pair or its neighbourhood");
  }
}

}  // namespace

LatticeVector pair_sum_vector(const Graph& g, const ExceptionalPair& p1,
                              const ExceptionalPair& p2) {
  return pair_vector(g.vertex_count(), p1) + pair_vector(g.vertex_count(), p2);
}

bool lemma_pair_sum(const Graph& g, const ExceptionalPair& p1, const ExceptionalPair& p2) {
  require_cactus(g);
  require_exceptional(g, p1);
  require_exceptional(g, p2);
  return pair_sum_closed_form(g, p1, p2);
}

LatticeVector edge_augment_vector(const Graph& g, const ExceptionalPair& p, Vertex u,
                                  Vertex v) {
  LatticeVector x = pair_vector(g.vertex_count(), p);
  x.add_at(u, 1);
  x.add_at(v, 1);
  return x;
}

bool lemma_edge_augment(const Graph& g, const ExceptionalPair& p, Vertex u, Vertex v) {
  const CactusLayout layout = require_cactus(g);
  require_exceptional(g, p);
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) {
    throw Error(ErrorCode::kNotAnEdge, "lemma_edge_augment");
  }
  return edge_augment_closed_form(g, layout, p, u, v);
}

LatticeVector double_w_edge_vector(const Graph& g, const ExceptionalPair& p, Vertex u,
                                   Vertex v) {
  const CactusLayout layout = require_cactus(g);
  LatticeVector x = pair_vector(g.vertex_count(), p);
  x.add_at(u, 1);
  x.add_at(v, 1);
  x.add_at(layout.w, 2);
  return x;
}

bool lemma_double_w_edge(const Graph& g, const ExceptionalPair& p, Vertex u, Vertex v) {
  const CactusLayout layout = require_cactus(g);
  require_exceptional(g, p);
  require_double_w_args(g, layout, p, u, v);
  return g.adjacent(u, v);
}

std::vector<LemmaCheck> audit_lemmas(const Graph& g) {
  const CactusLayout layout = require_cactus(g);
  const auto pairs = exceptional_pairs(g);
  MembershipOracle oracle(g);
  std::vector<LemmaCheck> out;

  auto describe = [&](const ExceptionalPair& p) {
    return "(" + g.set_label(p.first.vertex_set()) + "," + g.set_label(p.second.vertex_set()) +
           ")";
  };
  auto record = [&](Lemma lemma, std::string inputs, LatticeVector x, bool closed) {
    LemmaCheck c;
    c.lemma = lemma;
    c.inputs = std::move(inputs);
    c.closed_form = closed;
    if (auto w = oracle.witness(x)) {
      c.oracle = true;
      c.witness = std::move(*w);
    }
    c.vector = std::move(x);
    out.push_back(std::move(c));
  };

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      record(Lemma::kPairSum, describe(pairs[i]) + " " + describe(pairs[j]),
             pair_sum_vector(g, pairs[i], pairs[j]),
             pair_sum_closed_form(g, pairs[i], pairs[j]));
    }
  }
  for (const auto& p : pairs) {
    for (const Edge& e : g.edges()) {
      record(Lemma::kEdgeAugment, describe(p) + " " + g.edge_label(e),
             edge_augment_vector(g, p, e.u, e.v),
             edge_augment_closed_form(g, layout, p, e.u, e.v));
    }
  }
  for (const auto& p : pairs) {
    const VertexSet free = g.neighbors(layout.w) - closed_neighbourhood(g, p);
    const auto candidates = free.to_vector();
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        const Vertex u = candidates[a];
        const Vertex v = candidates[b];
        record(Lemma::kDoubleHubEdge, describe(p) + " " + g.label(u) + "," + g.label(v),
               double_w_edge_vector(g, p, u, v), g.adjacent(u, v));
      }
    }
  }
  return out;
}

}  // namespace edgering
