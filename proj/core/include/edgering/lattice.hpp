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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/vertex_set.hpp"

namespace edgering {

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

/// Integer vector in Z^d, indexed by a graph's canonical vertex order.
/// Orders graded-lexicographically: by degree (coordinate sum), then coords.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t d) : coords_(d, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> coords);
  LatticeVector(std::initializer_list<std::int64_t> coords)
      : LatticeVector(std::vector<std::int64_t>(coords)) {}

  static LatticeVector unit(std::size_t d, Vertex i);
  static LatticeVector indicator(std::size_t d, VertexSet s);

  std::size_t size() const { return coords_.size(); }
  std::int64_t degree() const { return degree_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  void add_at(std::size_t i, std::int64_t delta);
  bool nonnegative() const;
  bool is_zero() const;
  VertexSet support() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);

  bool operator==(const LatticeVector& o) const { return coords_ == o.coords_; }
  std::strong_ordering operator<=>(const LatticeVector& o) const;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
  std::int64_t degree_ = 0;
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

std::int64_t dot(const std::vector<std::int64_t>& coeffs, const LatticeVector& v);

/// rho(e) = e_u + e_v.
LatticeVector rho(std::size_t d, const Edge& e);

/// Sublattice of Z^d spanned by a list of generators, kept as the row basis
/// of its reduced Hermite normal form (pivots positive, entries above each
/// pivot reduced into [0, pivot)).
class IntegerLattice {
 public:
  IntegerLattice(std::size_t ambient_dimension,
                 const std::vector<LatticeVector>& generators);

  std::size_t ambient_dimension() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<std::int64_t>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Throws DimensionMismatch.
  bool contains(const LatticeVector& v) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace edgering
