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

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "edgering/error.hpp"
#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"
#include "edgering/semigroup.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace {

using namespace edgering;
using th::fixture;

LatticeVector t1_q() {
  return th::indicator(fixture("T1MIN"), {"x1", "y1_1", "y1_2", "x3", "y3_1", "y3_2"});
}

std::vector<LatticeVector> as_vectors(const std::set<std::vector<std::int64_t>>& s) {
  std::vector<LatticeVector> out;
  for (const auto& v : s) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> sorted(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Cone described by brute-force regular vertices and fundamental sets.
bool oracle_cone(const Graph& g, const LatticeVector& x) {
  const auto regular = oracle::regular_vertices(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (x[v] < 0 && (regular >> v & 1)) return false;
  }
  for (auto t : oracle::fundamental_sets(g)) {
    const auto n = oracle::neighbourhood(g, t);
    std::int64_t value = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (n >> v & 1) value += x[v];
      if (t >> v & 1) value -= x[v];
    }
    if (value < 0) return false;
  }
  return true;
}

// Cone and lattice filter over all nonnegative vectors of bounded degree.
std::vector<LatticeVector> oracle_normalization(const Graph& g, int max_degree) {
  std::vector<std::size_t> all_edges(g.edge_count());
  for (std::size_t i = 0; i < all_edges.size(); ++i) all_edges[i] = i;
  std::vector<LatticeVector> out;
  std::vector<std::int64_t> x(g.vertex_count(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == x.size()) {
      const LatticeVector v(x);
      if (v.degree() % 2 == 0 && oracle::in_edge_lattice(g, all_edges, v) && oracle_cone(g, v)) {
        out.push_back(v);
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      x[i] = k;
      rec(i + 1, left - k);
    }
    x[i] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Generators, Dimensions) {
  const auto t1 = generators(fixture("T1MIN"));
  EXPECT_EQ(t1.generators.size(), 12u);
  EXPECT_EQ(t1.dimension(), 9u);
  const auto tri = generators(fixture("TRIANGLE"));
  EXPECT_EQ(tri.generators.size(), 3u);
  EXPECT_EQ(tri.dimension(), 3u);
  EXPECT_EQ(generators(th::cycle_graph(4)).dimension(), 3u);
}

TEST(Member, T1minExamples) {
  const Graph& g = fixture("T1MIN");
  const LatticeVector sum = th::rho(g, "w", "x1") + th::rho(g, "y1_1", "y1_2");
  const Membership m = member(g, sum);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.witness.size(), 2u);
  EXPECT_FALSE(member(g, t1_q()).member);
  EXPECT_TRUE(member(g, 2 * t1_q()).member);
  EXPECT_TRUE(member(g, LatticeVector(9)).member);
  EXPECT_FALSE(member(g, LatticeVector::unit(9, 0)).member);
  EXPECT_THROW(member(g, LatticeVector(3)), Error);
}

TEST(Member, WitnessIsExact) {
  const Graph& g = fixture("T2MIN");
  MembershipOracle oracle(g);
  const LatticeVector x = 2 * th::indicator(g, {"x1", "y1_1", "y1_2", "x3", "y3_1", "y3_2"}) +
                          th::rho(g, "x5", "x6");
  const auto w = oracle.witness(x);
  ASSERT_TRUE(w.has_value());
  LatticeVector sum(g.vertex_count());
  for (auto e : *w) sum += rho(g.vertex_count(), g.edges()[e]);
  EXPECT_EQ(sum, x);
  EXPECT_GT(oracle.memo_size(), 0u);
}

TEST(LatticeMember, T1minExamples) {
  const Graph& g = fixture("T1MIN");
  EXPECT_FALSE(lattice_member(g, LatticeVector::unit(9, g.index_of("w"))));
  EXPECT_TRUE(lattice_member(g, th::rho(g, "w", "x1") - th::rho(g, "x3", "y3_1")));
  EXPECT_TRUE(lattice_member(g, t1_q()));
}

TEST(EnumerateNormalization, Examples) {
  const Graph& f3 = fixture("FRIEND3");
  EXPECT_EQ(enumerate_normalization(f3, 6), enumerate_semigroup(f3, 6));
  const Graph& t1 = fixture("T1MIN");
  const auto normal = enumerate_normalization(t1, 6);
  const auto semi = enumerate_semigroup(t1, 6);
  EXPECT_GT(normal.size(), semi.size());
  EXPECT_TRUE(std::binary_search(normal.begin(), normal.end(), t1_q()));
  EXPECT_EQ(enumerate_normalization(t1, 0), std::vector<LatticeVector>{LatticeVector(9)});
}

TEST(EnumerateNormalization, Errors) {
  EXPECT_THROW(enumerate_normalization(fixture("T1MIN"), -2), Error);
  EXPECT_THROW(enumerate_normalization(th::cycle_graph(4), 4), Error);
}

TEST(Holes, Examples) {
  EXPECT_TRUE(holes(fixture("FRIEND3"), 8).empty());
  const Graph& g = fixture("T1MIN");
  EXPECT_EQ(holes(g, 6), std::vector<LatticeVector>{t1_q()});
  const auto h12 = holes(g, 12);
  EXPECT_FALSE(std::binary_search(h12.begin(), h12.end(), 2 * t1_q()));
}

// Frozen from an independent prototype run; the D <= 8 prefix is re-derived
// from the brute-force oracles in OracleHoleCounts.
TEST(Holes, FrozenCounts) {
  const std::vector<std::size_t> t1 = {1, 9, 45, 165};
  const std::vector<std::size_t> t2 = {1, 12, 77, 352};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(holes(fixture("T1MIN"), 6 + 2 * i).size(), t1[i]);
    EXPECT_EQ(holes(fixture("T2MIN"), 6 + 2 * i).size(), t2[i]);
  }
}

TEST(SemigroupOracle, EnumerationMatchesClosure) {
  for (const char* name : {"BOWTIE", "TRIANGLE", "T1MIN", "T2MIN"}) {
    const Graph& g = fixture(name);
    EXPECT_EQ(enumerate_semigroup(g, 8), as_vectors(oracle::semigroup_ball(g, 8))) << name;
  }
}

TEST(SemigroupOracle, NormalizationMatchesBruteForceFilter) {
  EXPECT_EQ(enumerate_normalization(fixture("BOWTIE"), 8),
            oracle_normalization(fixture("BOWTIE"), 8));
  EXPECT_EQ(enumerate_normalization(fixture("T1MIN"), 8), oracle_normalization(fixture("T1MIN"), 8));
  EXPECT_EQ(enumerate_normalization(fixture("T2MIN"), 6), oracle_normalization(fixture("T2MIN"), 6));
}

TEST(SemigroupOracle, OracleHoleCounts) {
  for (const auto& [name, count] : {std::pair{"T1MIN", 9u}, std::pair{"T2MIN", 1u}}) {
    const Graph& g = fixture(name);
    const int deg = std::string(name) == "T1MIN" ? 8 : 6;
    const auto normal = oracle_normalization(g, deg);
    const auto ball = oracle::semigroup_ball(g, deg);
    std::size_t extra = 0;
    for (const auto& v : normal) extra += ball.count(v.coords()) ? 0 : 1;
    EXPECT_EQ(extra, count) << name;
  }
}

TEST(SemigroupOracle, NormalizationOnRandomGraphs) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 30) {
    const Graph g = gen::connected_graph(rng, 4 + checked % 5, 0.2);
    if (is_bipartite(g)) continue;
    EXPECT_EQ(normalization_by_cone_filter(g, 6), oracle_normalization(g, 6));
    EXPECT_EQ(normalization_by_closure(g, 6), oracle_normalization(g, 6));
    ++checked;
  }
}

TEST(SemigroupOracle, MemberMatchesClosureOnRandomVectors) {
  std::mt19937_64 rng(42);
  for (const char* name : {"T1MIN", "T2MIN", "BOWTIE"}) {
    const Graph& g = fixture(name);
    const auto ball = oracle::semigroup_ball(g, 10);
    MembershipOracle m(g);
    std::uniform_int_distribution<int> coord(0, 2);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<std::int64_t> x(g.vertex_count());
      int deg = 0;
      for (auto& c : x) deg += static_cast<int>(c = coord(rng));
      if (deg > 10) continue;
      EXPECT_EQ(m.contains(LatticeVector(x)), ball.count(x) == 1) << name;
    }
  }
}

// Property tests.

TEST(SemigroupProperties, DegreeParity) {
  for (const auto& [name, g] : th::fixtures().all()) {
    if (!is_connected(g) || is_bipartite(g) || g.vertex_count() > 12) continue;
    for (const auto& v : enumerate_normalization(g, 10)) EXPECT_EQ(v.degree() % 2, 0) << name;
  }
}

TEST(SemigroupProperties, WitnessSoundnessAndClosure) {
  std::mt19937_64 rng(43);
  const Graph& g = fixture("T2MIN");
  const auto elems = enumerate_semigroup(g, 8);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  MembershipOracle m(g);
  for (int trial = 0; trial < 300; ++trial) {
    const LatticeVector x = elems[pick(rng)] + elems[pick(rng)];
    const auto w = m.witness(x);
    ASSERT_TRUE(w.has_value());
    LatticeVector sum(g.vertex_count());
    for (auto e : *w) sum += rho(g.vertex_count(), g.edges()[e]);
    EXPECT_EQ(sum, x);
  }
}

TEST(SemigroupProperties, NormalizationSandwich) {
  for (const char* name : {"BOWTIE", "FRIEND3", "DIAM3", "T1MIN", "T2MIN"}) {
    const Graph& g = fixture(name);
    const auto semi = enumerate_semigroup(g, 10);
    const auto normal = enumerate_normalization(g, 10);
    EXPECT_TRUE(std::includes(normal.begin(), normal.end(), semi.begin(), semi.end())) << name;
    const EdgeCone cone(g);
    for (const auto& v : normal) {
      EXPECT_TRUE(cone.contains(v) && lattice_member(g, v)) << name;
    }
    EXPECT_EQ(normal.size() > semi.size(), !holes(g, 10).empty()) << name;
    EXPECT_EQ(sorted(holes_in(g, normal)).size(), normal.size() - semi.size()) << name;
  }
}

}  // namespace
