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

#include "edgering/hole_families.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "edgering/error.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

std::string_view to_string(CactusTypeTag tag) {
  switch (tag) {
    case CactusTypeTag::kType1: return "Type1";
    case CactusTypeTag::kType2: return "Type2";
    case CactusTypeTag::kNotDiameter4Cactus: return "NotDiameter4Cactus";
  }
  return "unknown";
}

std::string_view to_string(S2Status s) {
  return s == S2Status::kHolds ? "holds" : "inconclusive";
}

CactusType classify(const Graph& g) {
  CactusType type;
  if (!is_connected(g)) return type;
  type.layout = cactus_layout(g);
  if (!type.layout) return type;
  const CactusLayout& layout = *type.layout;
  for (std::size_t i = 0; i < layout.x.size(); ++i) {
    if (layout.s(i) == 0) type.zeta.insert(layout.x[i]);
  }
  for (std::size_t i = 0; i < layout.x.size(); i += 2) {
    if (type.zeta.contains(layout.x[i]) && type.zeta.contains(layout.x[i + 1])) {
      type.omega_pairs.emplace_back(layout.x[i], layout.x[i + 1]);
    }
  }
  type.tag = is_regular_vertex(g, layout.w) ? CactusTypeTag::kType1 : CactusTypeTag::kType2;
  return type;
}

VertexSet ExceptionalFamily::vertex_set() const {
  VertexSet s;
  for (const auto& p : pairs) s |= p.vertex_set();
  return s;
}

namespace {

CactusType require_class(const Graph& g) {
  CactusType type = classify(g);
  if (!type.in_class()) {
    throw Error(ErrorCode::kNotTriangularCactusDiam4, "hole families need the hub structure");
  }
  return type;
}

}  // namespace

FamilyEnumeration exceptional_families(const Graph& g) {
  const CactusType type = require_class(g);
  const std::size_t bound = type.layout->n() / 2;
  const auto pairs = exceptional_pairs(g);
  FamilyEnumeration out;
  ExceptionalFamily current;
  std::vector<const Cycle*> cycles;

  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t i = from; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      bool compatible = std::all_of(cycles.begin(), cycles.end(), [&](const Cycle* c) {
        return is_exceptional(g, *c, p.first) && is_exceptional(g, *c, p.second);
      });
      if (!compatible) continue;
      current.pairs.push_back(p);
      cycles.push_back(&p.first);
      cycles.push_back(&p.second);
      (current.p() <= bound ? out.families : out.beyond_bound).push_back(current);
      grow(i + 1);
      cycles.resize(cycles.size() - 2);
      current.pairs.pop_back();
    }
  };
  grow(0);
  auto by_size = [](const ExceptionalFamily& a, const ExceptionalFamily& b) {
    if (a.p() != b.p()) return a.p() < b.p();
    return a.pairs < b.pairs;
  };
  std::stable_sort(out.families.begin(), out.families.end(), by_size);
  std::stable_sort(out.beyond_bound.begin(), out.beyond_bound.end(), by_size);
  return out;
}

LatticeVector q_vector(std::size_t d, const ExceptionalFamily& f) {
  if (f.pairs.empty()) throw Error(ErrorCode::kEmptyFamily, "q_vector");
  LatticeVector q(d);
  for (const auto& p : f.pairs) q += pair_vector(d, p);
  return q;
}

std::vector<FundamentalSet> admissible_fundamental_sets(const Graph& g,
                                                        const ExceptionalFamily& f) {
  const CactusType type = require_class(g);
  const VertexSet cycles = f.vertex_set();
  std::vector<FundamentalSet> out;
  for (const FundamentalSet& t : fundamental_sets(g)) {
    if (!t.neighborhood.contains(type.layout->w)) continue;
    if ((t.vertices | t.neighborhood).intersects(cycles)) continue;
    out.push_back(t);
  }
  return out;
}

namespace {

// One outer vertex from each triangle hanging off x[i].
std::vector<VertexSet> outer_choices(const CactusLayout& layout, std::size_t i) {
  std::vector<VertexSet> out{VertexSet{}};
  for (std::size_t t = 0; t < layout.s(i); ++t) {
    std::vector<VertexSet> next;
    for (VertexSet s : out) {
      next.push_back(s | VertexSet{layout.y[i][2 * t]});
      next.push_back(s | VertexSet{layout.y[i][2 * t + 1]});
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<VertexSet> fundamental_building_blocks(const CactusType& type) {
  if (!type.in_class()) {
    throw Error(ErrorCode::kNotTriangularCactusDiam4, "building blocks");
  }
  const CactusLayout& layout = *type.layout;
  std::vector<VertexSet> blocks;

  // Items (i) / (b): outer choices at a single x_i.
  for (std::size_t i = 0; i < layout.x.size(); ++i) {
    if (layout.s(i) == 0) continue;
    for (VertexSet c : outer_choices(layout, i)) blocks.push_back(c);
  }

  // One vertex from every adjacent zeta pair; empty for Type 1.
  std::vector<VertexSet> omegas{VertexSet{}};
  for (auto [a, b] : type.omega_pairs) {
    std::vector<VertexSet> next;
    for (VertexSet s : omegas) {
      next.push_back(s | VertexSet{a});
      next.push_back(s | VertexSet{b});
    }
    omegas = std::move(next);
  }
  if (type.tag == CactusTypeTag::kType2) {
    for (VertexSet o : omegas) blocks.push_back(o);  // item (a)
  }

  // Items (ii) / (c): x_i with outer choices at its hub partner x_j.
  for (std::size_t i = 0; i < layout.x.size(); ++i) {
    const std::size_t j = i ^ 1U;
    if (type.zeta.contains(layout.x[i]) && type.zeta.contains(layout.x[j])) continue;
    for (VertexSet c : outer_choices(layout, j)) {
      for (VertexSet o : omegas) blocks.push_back(o | VertexSet{layout.x[i]} | c);
    }
  }

  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

bool is_union_of_blocks(VertexSet t, const std::vector<VertexSet>& blocks) {
  VertexSet covered;
  for (VertexSet b : blocks) {
    if (b.subset_of(t)) covered |= b;
  }
  return covered == t;
}

std::vector<HoleFamily> hole_decomposition(const Graph& g,
                                           const std::vector<LatticeVector>& normalization) {
  const CactusType type = require_class(g);
  const std::size_t d = g.vertex_count();
  const Vertex w = type.layout->w;

  std::vector<HoleFamily> out;
  auto add = [&](const ExceptionalFamily& source, Hyperplane facet) {
    LatticeVector shift = q_vector(d, source);
    for (const auto& f : out) {
      if (f.shift == shift && f.facet.coefficients == facet.coefficients) return;
    }
    HoleFamily fam;
    fam.source = source;
    fam.shift = std::move(shift);
    fam.facet = std::move(facet);
    out.push_back(std::move(fam));
  };
  for (const ExceptionalFamily& f : exceptional_families(g).families) {
    for (const FundamentalSet& t : admissible_fundamental_sets(g, f)) {
      add(f, fundamental_hyperplane(g, t.vertices));
    }
    if (type.tag == CactusTypeTag::kType1) add(f, regular_vertex_hyperplane(g, w));
  }

  const auto edges = g.edges();
  for (HoleFamily& fam : out) {
    const Face face = face_of(g, fam.facet);
    fam.dimension = face.dimension;
    std::vector<LatticeVector> gens;
    for (std::size_t e : face.edges) gens.push_back(rho(d, edges[e]));
    const IntegerLattice face_lattice(d, gens);
    for (const auto& x : normalization) {
      if (face_lattice.contains(x - fam.shift)) fam.points.push_back(x);
    }
  }
  return out;
}

std::vector<HoleFamily> hole_decomposition(const Graph& g, int max_degree) {
  return hole_decomposition(g, enumerate_normalization(g, max_degree));
}

std::map<std::int64_t, std::size_t> DecompositionReport::holes_per_degree() const {
  std::map<std::int64_t, std::size_t> out;
  for (const auto& h : holes) ++out[h.degree()];
  return out;
}

namespace {

std::vector<LatticeVector> up_to(const std::vector<LatticeVector>& sorted, int max_degree) {
  std::vector<LatticeVector> out;
  for (const auto& x : sorted) {
    if (x.degree() <= max_degree) out.push_back(x);
  }
  return out;
}

DecompositionReport build_report(const Graph& g, int max_degree,
                                 const std::vector<LatticeVector>& holes,
                                 std::vector<HoleFamily> families) {
  DecompositionReport r;
  r.max_degree = max_degree;
  r.dimension = g.vertex_count();
  r.holes = holes;
  std::unordered_set<LatticeVector, LatticeVectorHash> covered;
  for (const auto& f : families) covered.insert(f.points.begin(), f.points.end());
  r.covered.assign(covered.begin(), covered.end());
  std::sort(r.covered.begin(), r.covered.end());
  std::set_difference(r.holes.begin(), r.holes.end(), r.covered.begin(), r.covered.end(),
                      std::back_inserter(r.missing));
  std::set_difference(r.covered.begin(), r.covered.end(), r.holes.begin(), r.holes.end(),
                      std::back_inserter(r.unexpected));
  r.families = std::move(families);
  return r;
}

std::vector<HoleFamily> restrict_families(const std::vector<HoleFamily>& families,
                                          int max_degree) {
  std::vector<HoleFamily> out = families;
  for (auto& f : out) f.points = up_to(f.points, max_degree);
  return out;
}

}  // namespace

DecompositionReport compare_decomposition(const Graph& g, int max_degree) {
  const auto normalization = enumerate_normalization(g, max_degree);
  return build_report(g, max_degree, holes_in(g, normalization),
                      hole_decomposition(g, normalization));
}

DecompositionReport verify_decomposition(const Graph& g, int max_degree) {
  DecompositionReport r = compare_decomposition(g, max_degree);
  if (!r.consistent()) {
    throw Error(ErrorCode::kDecompositionMismatch,
                std::to_string(r.missing.size()) + " holes outside the families, " +
                    std::to_string(r.unexpected.size()) + " family points that are not holes" +
                    " at degree <= " + std::to_string(max_degree));
  }
  return r;
}

S2Verdict s2_verdict(const Graph& g, int max_degree) {
  S2Verdict v;
  v.normal = is_normal(g);
  v.type = classify(g).tag;
  if (v.normal) {
    v.hole_count = holes(g, max_degree).size();
    if (v.hole_count != 0) {
      throw Error(ErrorCode::kMethodMismatch, "graph satisfies the odd cycle condition but has holes");
    }
    v.degrees.push_back(max_degree);
    v.s2 = S2Status::kHolds;
    return v;
  }
  if (v.type == CactusTypeTag::kNotDiameter4Cactus) {
    throw Error(ErrorCode::kNotTriangularCactusDiam4, "no hole decomposition available");
  }

  const auto normalization = enumerate_normalization(g, max_degree);
  const auto all_holes = holes_in(g, normalization);
  const auto families = hole_decomposition(g, normalization);
  for (int slab = std::min(6, max_degree); slab <= max_degree; slab += 2) {
    v.degrees.push_back(slab);
  }
  if (v.degrees.back() != max_degree) v.degrees.push_back(max_degree);
  for (int slab : v.degrees) {
    DecompositionReport r = build_report(g, slab, up_to(all_holes, slab),
                                         restrict_families(families, slab));
    if (!r.consistent()) {
      throw Error(ErrorCode::kDecompositionMismatch,
                  "decomposition fails at degree <= " + std::to_string(slab));
    }
    v.slabs.push_back(std::move(r));
  }
  v.hole_count = all_holes.size();
  const std::size_t target = g.vertex_count() - 1;
  const bool all_facets = std::all_of(families.begin(), families.end(),
                                      [&](const HoleFamily& f) { return f.dimension == target; });
  v.s2 = all_facets ? S2Status::kHolds : S2Status::kInconclusive;
  return v;
}

}  // namespace edgering
