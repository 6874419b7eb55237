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

#include "edgering/report.hpp"

#include <sstream>

#include "edgering/error.hpp"
#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"
#include "edgering/hole_families.hpp"
#include "edgering/io.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

using nlohmann::json;

namespace {

json degree_map_to_json(const std::map<std::int64_t, std::size_t>& m) {
  json out = json::object();
  for (auto [deg, n] : m) out[std::to_string(deg)] = n;
  return out;
}

std::map<std::int64_t, std::size_t> degree_map_from_json(const json& j) {
  std::map<std::int64_t, std::size_t> out;
  for (const auto& [key, value] : j.items()) out[std::stoll(key)] = value.get<std::size_t>();
  return out;
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::map<std::int64_t, std::size_t> count_by_degree(const std::vector<LatticeVector>& vs) {
  std::map<std::int64_t, std::size_t> out;
  for (const auto& v : vs) ++out[v.degree()];
  return out;
}

}  // namespace

void to_json(json& j, const FamilyRow& r) {
  j = {{"shift", r.shift},
       {"facet", {{"kind", r.facet_kind}, {"vertices", r.facet_vertices}, {"coeffs", r.coefficients}}},
       {"dimension", r.dimension},
       {"points_per_degree", degree_map_to_json(r.points_per_degree)}};
}

void from_json(const json& j, FamilyRow& r) {
  r.shift = j.at("shift").get<std::vector<std::int64_t>>();
  const json& f = j.at("facet");
  r.facet_kind = f.at("kind").get<std::string>();
  r.facet_vertices = f.at("vertices").get<std::vector<std::string>>();
  r.coefficients = f.at("coeffs").get<std::vector<std::int64_t>>();
  r.dimension = j.at("dimension").get<std::size_t>();
  r.points_per_degree = degree_map_from_json(j.at("points_per_degree"));
}

void to_json(json& j, const AnalysisReport& r) {
  j = json::object();
  j["graph"] = {{"d", r.d},
                {"edge_count", r.edge_count},
                {"diameter", r.diameter},
                {"triangular_cactus", r.triangular_cactus},
                {"type", r.type}};
  j["normal"] = r.normal;
  j["exceptional_pairs"] = r.exceptional_pairs;
  j["regular_vertices"] = r.regular_vertices;
  j["fundamental_sets"] = r.fundamental_sets;
  j["max_degree"] = r.max_degree;
  j["holes_per_degree"] = r.holes_per_degree ? degree_map_to_json(*r.holes_per_degree) : json(nullptr);
  j["families"] = r.families;
  put_optional(j, "decomposition_verified", r.decomposition_verified);
  put_optional(j, "s2", r.s2);
}

void from_json(const json& j, AnalysisReport& r) {
  const json& g = j.at("graph");
  r.d = g.at("d").get<std::size_t>();
  r.edge_count = g.at("edge_count").get<std::size_t>();
  r.diameter = g.at("diameter").get<int>();
  r.triangular_cactus = g.at("triangular_cactus").get<bool>();
  r.type = g.at("type").get<std::string>();
  r.normal = j.at("normal").get<bool>();
  r.exceptional_pairs = j.at("exceptional_pairs").get<decltype(r.exceptional_pairs)>();
  r.regular_vertices = j.at("regular_vertices").get<std::vector<std::string>>();
  r.fundamental_sets = j.at("fundamental_sets").get<decltype(r.fundamental_sets)>();
  r.max_degree = j.at("max_degree").get<int>();
  r.holes_per_degree.reset();
  if (!j.at("holes_per_degree").is_null()) {
    r.holes_per_degree = degree_map_from_json(j.at("holes_per_degree"));
  }
  r.families = j.at("families").get<std::vector<FamilyRow>>();
  r.decomposition_verified = get_optional<bool>(j, "decomposition_verified");
  r.s2 = get_optional<bool>(j, "s2");
}

AnalysisReport analyze(const Graph& g, int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::kPreconditionViolated, "degree must be nonnegative");
  AnalysisReport r;
  r.d = g.vertex_count();
  r.edge_count = g.edge_count();
  r.max_degree = max_degree;
  const auto pairs = exceptional_pairs(g);
  const CactusType type = classify(g);
  r.type = std::string(to_string(type.tag));
  r.diameter = diameter(g);
  r.triangular_cactus = is_triangular_cactus(g);
  r.normal = pairs.empty();
  for (const auto& p : pairs) {
    r.exceptional_pairs.push_back({labels_of(g, p.first.vertex_set()),
                                   labels_of(g, p.second.vertex_set())});
  }
  if (is_bipartite(g)) return r;

  r.regular_vertices = labels_of(g, regular_vertices(g));
  for (const auto& t : fundamental_sets(g)) r.fundamental_sets.push_back(labels_of(g, t.vertices));

  if (r.normal || type.in_class()) {
    const S2Verdict v = s2_verdict(g, max_degree);
    r.s2 = v.s2 == S2Status::kHolds;
    if (r.normal) return r;
    const DecompositionReport& last = v.slabs.back();
    r.holes_per_degree = last.holes_per_degree();
    bool verified = true;
    for (const auto& slab : v.slabs) verified = verified && slab.consistent();
    r.decomposition_verified = verified;
    for (const auto& f : last.families) {
      FamilyRow row;
      row.shift = f.shift.coords();
      row.facet_kind = f.facet.kind == HyperplaneKind::kRegularVertex ? "regular" : "fundamental";
      row.facet_vertices = f.facet.kind == HyperplaneKind::kRegularVertex
                               ? std::vector<std::string>{g.label(f.facet.vertex)}
                               : labels_of(g, f.facet.fundamental_set());
      row.coefficients = f.facet.coefficients;
      row.dimension = f.dimension;
      row.points_per_degree = count_by_degree(f.points);
      r.families.push_back(std::move(row));
    }
  } else {
    r.holes_per_degree = count_by_degree(holes(g, max_degree));
  }
  return r;
}

std::string format_report(const AnalysisReport& r) {
  std::ostringstream out;
  out << "d=" << r.d << " edges=" << r.edge_count << " diameter=" << r.diameter;
  out << " cactus=" << (r.triangular_cactus ? "yes" : "no") << " type=" << r.type << '\n';
  out << "normal=" << (r.normal ? "true" : "false")
      << " exceptional_pairs=" << r.exceptional_pairs.size() << '\n';
  out << "regular_vertices=" << r.regular_vertices.size()
      << " fundamental_sets=" << r.fundamental_sets.size() << '\n';
  if (r.holes_per_degree) {
    std::size_t total = 0;
    out << "holes up to degree " << r.max_degree << ":";
    for (auto [deg, n] : *r.holes_per_degree) {
      out << ' ' << deg << ':' << n;
      total += n;
    }
    out << " (total " << total << ")\n";
  }
  for (const auto& f : r.families) {
    out << "  family shift=(";
    for (std::size_t i = 0; i < f.shift.size(); ++i) out << (i ? "," : "") << f.shift[i];
    out << ") facet=" << (f.facet_kind == "regular" ? "H_" : "H_T{");
    for (std::size_t i = 0; i < f.facet_vertices.size(); ++i) {
      out << (i ? "," : "") << f.facet_vertices[i];
    }
    out << (f.facet_kind == "regular" ? "" : "}") << " dim=" << f.dimension << '\n';
  }
  if (r.decomposition_verified) {
    out << "decomposition=" << (*r.decomposition_verified ? "verified" : "MISMATCH") << '\n';
  }
  if (r.s2) out << "s2=" << (*r.s2 ? "true" : "inconclusive") << '\n';
  return out.str();
}

}  // namespace edgering
