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

#include "edgering/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "edgering/error.hpp"
#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"

namespace edgering {

SemigroupData generators(const Graph& g) {
  std::vector<LatticeVector> gens;
  gens.reserve(g.edge_count());
  for (const Edge& e : g.edges()) gens.push_back(rho(g.vertex_count(), e));
  IntegerLattice lattice(g.vertex_count(), gens);
  return SemigroupData{std::move(gens), std::move(lattice)};
}

MembershipOracle::MembershipOracle(const Graph& g)
    : graph_(&g), incident_(g.vertex_count()) {
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    incident_[g.edges()[i].u].push_back(i);
    incident_[g.edges()[i].v].push_back(i);
  }
}

std::optional<std::string> MembershipOracle::key(const std::vector<std::int64_t>& x) const {
  std::string k(x.size(), '\0');
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 255) return std::nullopt;
    k[i] = char(x[i]);
  }
  return k;
}

// Each unit at v must pair with a unit at a neighbour.
bool MembershipOracle::plausible(const std::vector<std::int64_t>& x) const {
  for (Vertex v = 0; v < x.size(); ++v) {
    if (x[v] == 0) continue;
    std::int64_t around = 0;
    graph_->neighbors(v).for_each([&](Vertex u) { around += x[u]; });
    if (x[v] > around) return false;
  }
  return true;
}

bool MembershipOracle::solve(std::vector<std::int64_t>& x) {
  auto first = std::find_if(x.begin(), x.end(), [](std::int64_t c) { return c > 0; });
  if (first == x.end()) return true;
  auto k = key(x);
  if (k) {
    if (auto it = memo_.find(*k); it != memo_.end()) return it->second != kFail;
  }
  std::int32_t choice = kFail;
  if (plausible(x)) {
    const Vertex i = Vertex(first - x.begin());
    for (std::size_t e : incident_[i]) {
      const Edge& edge = graph_->edges()[e];
      const Vertex j = edge.u == i ? edge.v : edge.u;
      if (x[j] == 0) continue;
      --x[i];
      --x[j];
      bool ok = solve(x);
      ++x[i];
      ++x[j];
      if (ok) {
        choice = std::int32_t(e);
        break;
      }
    }
  }
  if (k) memo_.emplace(std::move(*k), choice);
  return choice != kFail;
}

bool MembershipOracle::contains(const LatticeVector& x) {
  if (x.size() != graph_->vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "membership");
  }
  if (!x.nonnegative() || x.degree() % 2 != 0) return false;
  std::vector<std::int64_t> work = x.coords();
  return solve(work);
}

std::optional<std::vector<std::size_t>> MembershipOracle::witness(const LatticeVector& x) {
  if (!contains(x)) return std::nullopt;
  std::vector<std::size_t> edges;
  std::vector<std::int64_t> rest = x.coords();
  while (std::any_of(rest.begin(), rest.end(), [](std::int64_t c) { return c > 0; })) {
    auto k = key(rest);
    std::int32_t e = kFail;
    if (k) {
      if (auto it = memo_.find(*k); it != memo_.end()) e = it->second;
    }
    if (e < 0) {
      // Residual too large to memoize: re-solve one level.
      const Vertex i = Vertex(std::find_if(rest.begin(), rest.end(),
                                           [](std::int64_t c) { return c > 0; }) -
                              rest.begin());
      for (std::size_t cand : incident_[i]) {
        const Edge& edge = graph_->edges()[cand];
        const Vertex j = edge.u == i ? edge.v : edge.u;
        if (rest[j] == 0) continue;
        --rest[i];
        --rest[j];
        bool ok = solve(rest);
        ++rest[i];
        ++rest[j];
        if (ok) {
          e = std::int32_t(cand);
          break;
        }
      }
    }
    const Edge& edge = graph_->edges()[std::size_t(e)];
    --rest[edge.u];
    --rest[edge.v];
    edges.push_back(std::size_t(e));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Membership member(const Graph& g, const LatticeVector& x) {
  MembershipOracle oracle(g);
  auto w = oracle.witness(x);
  if (!w) return {};
  return {true, std::move(*w)};
}

bool lattice_member(const Graph& g, const LatticeVector& x) {
  return generators(g).lattice.contains(x);
}

namespace {

void require_degree(int max_degree) {
  if (max_degree < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "degree bound must be nonnegative");
  }
}

std::vector<LatticeVector> closure(std::size_t d, const std::vector<LatticeVector>& steps,
                                   int max_degree) {
  std::unordered_set<LatticeVector, LatticeVectorHash> seen;
  std::vector<LatticeVector> frontier{LatticeVector(d)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<LatticeVector> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        if (x.degree() + s.degree() > max_degree) continue;
        LatticeVector y = x + s;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::vector<LatticeVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_non_bipartite(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, what);
  if (is_bipartite(g)) throw Error(ErrorCode::kBipartite, what);
}

}  // namespace

std::vector<LatticeVector> enumerate_semigroup(const Graph& g, int max_degree) {
  require_degree(max_degree);
  return closure(g.vertex_count(), generators(g).generators, max_degree);
}

std::vector<LatticeVector> normalization_by_closure(const Graph& g, int max_degree) {
  require_degree(max_degree);
  require_non_bipartite(g, "normalization_by_closure");
  std::vector<LatticeVector> steps = generators(g).generators;
  for (const ExceptionalPair& p : exceptional_pairs(g)) {
    steps.push_back(pair_vector(g.vertex_count(), p));
  }
  return closure(g.vertex_count(), steps, max_degree);
}

std::vector<LatticeVector> normalization_by_cone_filter(const Graph& g, int max_degree) {
  require_degree(max_degree);
  require_non_bipartite(g, "normalization_by_cone_filter");
  const std::size_t d = g.vertex_count();
  const EdgeCone cone(g);
  const IntegerLattice lattice = generators(g).lattice;
  const auto& planes = cone.hyperplanes();

  // column[k]: (hyperplane, coefficient) pairs touching coordinate k.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> column(d);
  // growable[h][k]: some coefficient of h at index >= k is positive.
  std::vector<std::vector<bool>> growable(planes.size(), std::vector<bool>(d + 1, false));
  for (std::size_t h = 0; h < planes.size(); ++h) {
    for (std::size_t k = d; k-- > 0;) {
      const std::int64_t c = planes[h].coefficients[k];
      if (c != 0) column[k].emplace_back(h, c);
      growable[h][k] = growable[h][k + 1] || c > 0;
    }
  }

  std::vector<LatticeVector> out;
  std::vector<std::int64_t> coords(d, 0);
  std::vector<std::int64_t> value(planes.size(), 0);

  std::function<void(std::size_t, std::int64_t)> assign = [&](std::size_t k,
                                                               std::int64_t budget) {
    for (std::size_t h = 0; h < planes.size(); ++h) {
      const std::int64_t reach = growable[h][k] ? budget : 0;
      if (value[h] + reach < 0) return;
    }
    if (k == d) {
      LatticeVector x(coords);
      if (x.degree() % 2 == 0 && lattice.contains(x)) out.push_back(std::move(x));
      return;
    }
    for (std::int64_t c = 0; c <= budget; ++c) {
      coords[k] = c;
      assign(k + 1, budget - c);
      for (auto [h, coef] : column[k]) value[h] += coef;
    }
    for (auto [h, coef] : column[k]) value[h] -= coef * (budget + 1);
    coords[k] = 0;
  };
  assign(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> enumerate_normalization(const Graph& g, int max_degree) {
  auto by_filter = normalization_by_cone_filter(g, max_degree);
  auto by_closure = normalization_by_closure(g, max_degree);
  if (by_filter != by_closure) {
    throw Error(ErrorCode::kMethodMismatch,
                "cone/lattice filter found " + std::to_string(by_filter.size()) +
                    " vectors, closure found " + std::to_string(by_closure.size()));
  }
  return by_filter;
}

std::vector<LatticeVector> holes_in(const Graph& g,
                                    const std::vector<LatticeVector>& normalization) {
  MembershipOracle oracle(g);
  std::vector<LatticeVector> out;
  for (const auto& x : normalization) {
    if (!oracle.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<LatticeVector> holes(const Graph& g, int max_degree) {
  return holes_in(g, enumerate_normalization(g, max_degree));
}

}  // namespace edgering
