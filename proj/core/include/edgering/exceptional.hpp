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

#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

/// Two vertex-disjoint minimal odd cycles with no edge between them,
/// stored with first < second.
struct ExceptionalPair {
  Cycle first;
  Cycle second;

  VertexSet vertex_set() const { return first.vertex_set() | second.vertex_set(); }

  bool operator==(const ExceptionalPair&) const = default;
  auto operator<=>(const ExceptionalPair&) const = default;
};

/// E_C: indicator vector of V(C).
LatticeVector cycle_vector(std::size_t d, const Cycle& c);
/// E_C + E_C'.
LatticeVector pair_vector(std::size_t d, const ExceptionalPair& p);

/// Disjoint and bridge-free. Identical or intersecting cycles are never
/// exceptional.
bool is_exceptional(const Graph& g, const Cycle& a, const Cycle& b);

/// Every unordered exceptional pair of minimal odd cycles, sorted.
/// Throws Disconnected.
std::vector<ExceptionalPair> exceptional_pairs(const Graph& g);

bool odd_cycle_condition(const Graph& g);
/// Edge-ring normality verdict; equal to odd_cycle_condition.
bool is_normal(const Graph& g);

// Closed-form membership verdicts that hold on triangular cacti of
// diameter 4. Each throws NotTriangularCactusDiam4 outside that class and
// PreconditionViolated when its arguments fall outside the statement.

/// E_Ci + E_Ci' + E_Cj + E_Cj' lies in S_G iff the four cycles can be
/// re-matched into two non-exceptional pairs.
bool lemma_pair_sum(const Graph& g, const ExceptionalPair& p1, const ExceptionalPair& p2);
LatticeVector pair_sum_vector(const Graph& g, const ExceptionalPair& p1,
                              const ExceptionalPair& p2);

/// E_C + E_C' + e_u + e_v lies in S_G iff one endpoint is the hub and the
/// other lies in V(C) u V(C') or its neighbourhood. Throws NotAnEdge.
bool lemma_edge_augment(const Graph& g, const ExceptionalPair& p, Vertex u, Vertex v);
LatticeVector edge_augment_vector(const Graph& g, const ExceptionalPair& p, Vertex u, Vertex v);

/// For hub edges {u,w}, {v,w} with u, v away from the pair and its
/// neighbourhood: E_C + E_C' + rho(uw) + rho(vw) lies in S_G iff {u,v} is an
/// edge.
bool lemma_double_w_edge(const Graph& g, const ExceptionalPair& p, Vertex u, Vertex v);
LatticeVector double_w_edge_vector(const Graph& g, const ExceptionalPair& p, Vertex u,
                                   Vertex v);

enum class Lemma { kPairSum, kEdgeAugment, kDoubleHubEdge };

std::string_view to_string(Lemma lemma);

/// One closed-form verdict next to the membership oracle's answer.
struct LemmaCheck {
  Lemma lemma = Lemma::kPairSum;
  std::string inputs;
  LatticeVector vector;
  bool closed_form = false;
  bool oracle = false;
  std::vector<std::size_t> witness;  // edge indices when oracle is true

  bool agrees() const { return closed_form == oracle; }
};

/// Every admissible argument tuple of the three lemmas on g, each compared
/// with the oracle. Throws NotTriangularCactusDiam4.
std::vector<LemmaCheck> audit_lemmas(const Graph& g);

}  // namespace edgering
