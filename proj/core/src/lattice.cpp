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

#include "edgering/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "edgering/error.hpp"

namespace edgering {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "add");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "sub");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "mul");
  return r;
}

}  // namespace detail

LatticeVector::LatticeVector(std::vector<std::int64_t> coords)
    : coords_(std::move(coords)) {
  for (std::int64_t c : coords_) degree_ = detail::checked_add(degree_, c);
}

LatticeVector LatticeVector::unit(std::size_t d, Vertex i) {
  LatticeVector v(d);
  v.add_at(i, 1);
  return v;
}

LatticeVector LatticeVector::indicator(std::size_t d, VertexSet s) {
  LatticeVector v(d);
  s.for_each([&](Vertex i) { v.add_at(i, 1); });
  return v;
}

void LatticeVector::add_at(std::size_t i, std::int64_t delta) {
  coords_[i] = detail::checked_add(coords_[i], delta);
  degree_ = detail::checked_add(degree_, delta);
}

bool LatticeVector::nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

VertexSet LatticeVector::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) s.insert(i);
  }
  return s;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "vector add");
  for (std::size_t i = 0; i < coords_.size(); ++i) add_at(i, o.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "vector sub");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    add_at(i, detail::checked_sub(0, o.coords_[i]));
  }
  return *this;
}

LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
  std::vector<std::int64_t> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = detail::checked_mul(k, v[i]);
  return LatticeVector(std::move(c));
}

std::strong_ordering LatticeVector::operator<=>(const LatticeVector& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  return coords_ <=> o.coords_;
}

std::string LatticeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::int64_t c : v.coords()) {
    h ^= std::size_t(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t dot(const std::vector<std::int64_t>& coeffs, const LatticeVector& v) {
  if (coeffs.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "dot");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) s = detail::checked_add(s, detail::checked_mul(coeffs[i], v[i]));
  }
  return s;
}

LatticeVector rho(std::size_t d, const Edge& e) {
  LatticeVector v(d);
  v.add_at(e.u, 1);
  v.add_at(e.v, 1);
  return v;
}

namespace {

using Row = std::vector<std::int64_t>;

// row_a -= k * row_b
void axpy(Row& a, std::int64_t k, const Row& b) {
  if (k == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = detail::checked_sub(a[i], detail::checked_mul(k, b[i]));
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t ambient_dimension,
                               const std::vector<LatticeVector>& generators)
    : dim_(ambient_dimension) {
  std::vector<Row> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "lattice generator");
    if (!g.is_zero()) rows.push_back(g.coords());
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim_ && r < rows.size(); ++col) {
    // Euclid down the column until one nonzero entry remains at row r.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy(rows[i], rows[i][col] / rows[r][col], rows[r]);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (auto& e : rows[r]) e = detail::checked_sub(0, e);
    }
    for (std::size_t i = 0; i < r; ++i) {
      axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    }
    pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  basis_ = std::move(rows);
}

bool IntegerLattice::contains(const LatticeVector& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "lattice membership");
  Row rest = v.coords();
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (; col < pivots_[i]; ++col) {
      if (rest[col] != 0) return false;
    }
    const std::int64_t pivot = basis_[i][col];
    if (rest[col] % pivot != 0) return false;
    axpy(rest, rest[col] / pivot, basis_[i]);
    ++col;
  }
  for (; col < dim_; ++col) {
    if (rest[col] != 0) return false;
  }
  return true;
}

}  // namespace edgering
