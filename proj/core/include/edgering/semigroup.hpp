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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"

namespace edgering {

/// Generators rho(e) of the edge semigroup, one per edge in edge order, and
/// the lattice they span.
struct SemigroupData {
  std::vector<LatticeVector> generators;
  IntegerLattice lattice;

  std::size_t dimension() const { return lattice.rank(); }
};

SemigroupData generators(const Graph& g);

/// Exact membership in S_G by backtracking: the least-index positive
/// coordinate must be covered by some edge at that vertex. Residual vectors
/// are memoized for the lifetime of the oracle, so reuse one instance across
/// many queries on the same graph. Not thread-safe.
class MembershipOracle {
 public:
  explicit MembershipOracle(const Graph& g);

  /// Throws DimensionMismatch.
  bool contains(const LatticeVector& x);
  /// Edge indices (with repetition) whose rho sum to x, if x is in S_G.
  std::optional<std::vector<std::size_t>> witness(const LatticeVector& x);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  static constexpr std::int32_t kFail = -1;
  static constexpr std::int32_t kDone = -2;

  bool solve(std::vector<std::int64_t>& x);
  std::optional<std::string> key(const std::vector<std::int64_t>& x) const;
  bool plausible(const std::vector<std::int64_t>& x) const;

  const Graph* graph_;
  std::vector<std::vector<std::size_t>> incident_;  // edge indices per vertex
  std::unordered_map<std::string, std::int32_t> memo_;
};

struct Membership {
  bool member = false;
  std::vector<std::size_t> witness;  // edge indices, empty unless member
};

Membership member(const Graph& g, const LatticeVector& x);
/// x in Z S_G, via the Hermite basis of the generator lattice.
bool lattice_member(const Graph& g, const LatticeVector& x);

/// S_G truncated at degree max_degree, sorted graded-lexicographically.
std::vector<LatticeVector> enumerate_semigroup(const Graph& g, int max_degree);

/// Nonnegative vectors of even degree <= max_degree that lie in the cone
/// and the lattice, found by a pruned coordinate-wise search.
std::vector<LatticeVector> normalization_by_cone_filter(const Graph& g, int max_degree);
/// Closure of {0} under rho(e) and E_C + E_C' over exceptional pairs.
std::vector<LatticeVector> normalization_by_closure(const Graph& g, int max_degree);
/// Runs both methods; throws MethodMismatch if they disagree. Requires a
/// connected non-bipartite graph.
std::vector<LatticeVector> enumerate_normalization(const Graph& g, int max_degree);

/// Normalization elements of degree <= max_degree outside S_G.
std::vector<LatticeVector> holes(const Graph& g, int max_degree);
/// Same, given an already computed normalization enumeration.
std::vector<LatticeVector> holes_in(const Graph& g, const std::vector<LatticeVector>& normalization);

}  // namespace edgering
