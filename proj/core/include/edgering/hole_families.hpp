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

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"
#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"

namespace edgering {

enum class CactusTypeTag { kType1, kType2, kNotDiameter4Cactus };

std::string_view to_string(CactusTypeTag tag);

/// Type 1: the hub w is a regular cutpoint. Type 2: w is not regular, i.e.
/// some hub triangle has both outer vertices bare.
struct CactusType {
  CactusTypeTag tag = CactusTypeTag::kNotDiameter4Cactus;
  std::optional<CactusLayout> layout;
  VertexSet zeta;                                 // hub neighbours with s_i = 0
  std::vector<std::pair<Vertex, Vertex>> omega_pairs;  // adjacent zeta pairs

  bool in_class() const { return tag != CactusTypeTag::kNotDiameter4Cactus; }
};

CactusType classify(const Graph& g);

/// p exceptional pairs whose 2p cycles are pairwise exceptional.
struct ExceptionalFamily {
  std::vector<ExceptionalPair> pairs;

  std::size_t p() const { return pairs.size(); }
  VertexSet vertex_set() const;

  bool operator==(const ExceptionalFamily&) const = default;
};

struct FamilyEnumeration {
  std::vector<ExceptionalFamily> families;      // 1 <= p <= floor(n/2)
  std::vector<ExceptionalFamily> beyond_bound;  // compatible, but p > floor(n/2)
};

/// Requires a diameter-4 triangular cactus (throws NotTriangularCactusDiam4).
FamilyEnumeration exceptional_families(const Graph& g);

/// Sum of E_C + E_C' over the family. Throws EmptyFamily.
LatticeVector q_vector(std::size_t d, const ExceptionalFamily& f);

/// Fundamental sets T with w in N(T) and T u N(T) disjoint from every cycle
/// of the family.
std::vector<FundamentalSet> admissible_fundamental_sets(const Graph& g,
                                                        const ExceptionalFamily& f);

/// The building blocks of fundamental sets avoiding w: items (i)/(ii) for
/// Type 1, (a)/(b)/(c) for Type 2. Sorted, deduplicated.
std::vector<VertexSet> fundamental_building_blocks(const CactusType& type);
bool is_union_of_blocks(VertexSet t, const std::vector<VertexSet>& blocks);

/// (q + Z F) intersected with the cone, truncated by degree.
struct HoleFamily {
  ExceptionalFamily source;
  LatticeVector shift;
  Hyperplane facet;
  std::size_t dimension = 0;
  std::vector<LatticeVector> points;
};

/// Families predicted for a diameter-4 triangular cactus: q + Z F_T for
/// every family and admissible T, plus q + Z F_w when w is regular. Points
/// are drawn from `normalization`, which must be the truncated normalization
/// of g. Duplicate (shift, facet) entries are merged.
std::vector<HoleFamily> hole_decomposition(const Graph& g,
                                           const std::vector<LatticeVector>& normalization);
std::vector<HoleFamily> hole_decomposition(const Graph& g, int max_degree);

struct DecompositionReport {
  int max_degree = 0;
  std::size_t dimension = 0;  // d
  std::vector<LatticeVector> holes;
  std::vector<LatticeVector> covered;       // union of family points
  std::vector<LatticeVector> missing;       // holes outside every family
  std::vector<LatticeVector> unexpected;    // family points that are not holes
  std::vector<HoleFamily> families;

  bool consistent() const { return missing.empty() && unexpected.empty(); }
  std::map<std::int64_t, std::size_t> holes_per_degree() const;
};

/// Builds the report without throwing on disagreement.
DecompositionReport compare_decomposition(const Graph& g, int max_degree);
/// As compare_decomposition, throwing DecompositionMismatch on disagreement.
DecompositionReport verify_decomposition(const Graph& g, int max_degree);

enum class S2Status { kHolds, kInconclusive };

std::string_view to_string(S2Status s);

struct S2Verdict {
  bool normal = false;
  S2Status s2 = S2Status::kInconclusive;
  CactusTypeTag type = CactusTypeTag::kNotDiameter4Cactus;
  std::vector<int> degrees;            // truncation slabs checked
  std::vector<DecompositionReport> slabs;
  std::size_t hole_count = 0;          // at the largest slab
};

/// Normal graphs satisfy (S2) outright. Otherwise g must be a diameter-4
/// triangular cactus: the decomposition is checked at every even slab from 6
/// up to max_degree and (S2) holds when every family has dimension d - 1.
/// A lower-dimensional family yields kInconclusive. Throws
/// DecompositionMismatch, MethodMismatch, NotTriangularCactusDiam4.
S2Verdict s2_verdict(const Graph& g, int max_degree);

}  // namespace edgering
