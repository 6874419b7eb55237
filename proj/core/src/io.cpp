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

#include "edgering/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "edgering/error.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

using nlohmann::json;

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long d = -1, m = -1;
  if (!(in >> d >> m) || d <= 0 || m < 0) {
    throw Error(ErrorCode::kParseError, "header must be 'd m' with d > 0, m >= 0");
  }
  std::vector<std::string> labels(static_cast<std::size_t>(d));
  for (auto& l : labels) {
    if (!(in >> l)) throw Error(ErrorCode::kParseError, "missing vertex label");
  }
  std::vector<std::pair<std::string, std::string>> edges(static_cast<std::size_t>(m));
  for (auto& [a, b] : edges) {
    if (!(in >> a >> b)) throw Error(ErrorCode::kParseError, "missing edge line");
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParseError, "trailing content: " + extra);
  return Graph::from_edges(std::move(labels), edges);
}

Graph parse_graph_json(const json& j) {
  try {
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) {
      labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParseError, "edge must be a pair");
      auto name = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      edges.emplace_back(name(e[0]), name(e[1]));
    }
    return Graph::from_edges(std::move(labels), edges);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParseError, ex.what());
  }
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::kParseError, ex.what());
    }
    return parse_graph_json(j);
  }
  return parse_graph_text(text);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& l : g.labels()) out << l << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  return {{"vertices", g.labels()}, {"edges", edges}};
}

CactusSpec parse_cactus_spec(const json& j) {
  try {
    CactusSpec spec;
    spec.n = j.at("n").get<int>();
    spec.s = j.value("s", std::vector<int>{});
    return spec;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParseError, ex.what());
  }
}

json cactus_spec_to_json(const CactusSpec& spec) { return {{"n", spec.n}, {"s", spec.s}}; }

std::vector<std::string> labels_of(const Graph& g, VertexSet s) {
  std::vector<std::string> out;
  s.for_each([&](Vertex v) { out.push_back(g.label(v)); });
  return out;
}

json hyperplane_to_json(const Graph& g, const Hyperplane& h) {
  if (h.kind == HyperplaneKind::kRegularVertex) {
    return {{"kind", "regular"}, {"vertex", g.label(h.vertex)}};
  }
  json j = {{"kind", "fundamental"},
            {"T", labels_of(g, h.fundamental_set())},
            {"coeffs", h.coefficients}};
  if (h.sources.size() > 1) {
    json all = json::array();
    for (VertexSet t : h.sources) all.push_back(labels_of(g, t));
    j["sources"] = all;
  }
  return j;
}

json face_to_json(const Graph& g, const Hyperplane& h, const Face& f) {
  json edges = json::array();
  for (std::size_t e : f.edges) edges.push_back(g.edge_label(g.edges()[e]));
  return {{"hyperplane", hyperplane_to_json(g, h)},
          {"generators", edges},
          {"dimension", f.dimension}};
}

json vectors_to_json(std::vector<LatticeVector> vs) {
  std::sort(vs.begin(), vs.end());
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

json hole_records_json(const Graph& g, const std::vector<LatticeVector>& holes) {
  const EdgeCone cone(g);
  const IntegerLattice lattice = generators(g).lattice;
  MembershipOracle oracle(g);
  json out = json::array();
  for (const auto& h : holes) {
    out.push_back({{"degree", h.degree()},
                   {"vector", h.coords()},
                   {"in_cone", cone.contains(h)},
                   {"in_lattice", lattice.contains(h)},
                   {"member", oracle.contains(h)}});
  }
  return out;
}

json exceptional_pair_to_json(const Graph& g, const ExceptionalPair& p) {
  return json::array({labels_of(g, p.first.vertex_set()), labels_of(g, p.second.vertex_set())});
}

json lemma_check_to_json(const Graph& g, const LemmaCheck& c) {
  json witness = json::array();
  for (std::size_t e : c.witness) witness.push_back(g.edge_label(g.edges()[e]));
  json j = {{"lemma", to_string(c.lemma)},
            {"inputs", c.inputs},
            {"vector", c.vector.coords()},
            {"closed_form", c.closed_form},
            {"oracle", c.oracle}};
  if (c.oracle) j["witness"] = witness;
  return j;
}

namespace {

json per_degree(const std::vector<LatticeVector>& vs) {
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& v : vs) ++counts[v.degree()];
  json out = json::object();
  for (auto [deg, n] : counts) out[std::to_string(deg)] = n;
  return out;
}

}  // namespace

json hole_family_to_json(const Graph& g, const HoleFamily& f) {
  json pairs = json::array();
  for (const auto& p : f.source.pairs) pairs.push_back(exceptional_pair_to_json(g, p));
  return {{"shift", f.shift.coords()},
          {"pairs", pairs},
          {"facet", hyperplane_to_json(g, f.facet)},
          {"dimension", f.dimension},
          {"points_per_degree", per_degree(f.points)}};
}

json decomposition_to_json(const Graph& g, const DecompositionReport& r) {
  json fams = json::array();
  for (const auto& f : r.families) fams.push_back(hole_family_to_json(g, f));
  return {{"max_degree", r.max_degree},
          {"holes_per_degree", per_degree(r.holes)},
          {"hole_count", r.holes.size()},
          {"covered_count", r.covered.size()},
          {"missing", vectors_to_json(r.missing)},
          {"unexpected", vectors_to_json(r.unexpected)},
          {"families", fams},
          {"consistent", r.consistent()}};
}

json s2_evidence_json(const Graph& g, const S2Verdict& v) {
  json pairs = json::array();
  for (const auto& p : exceptional_pairs(g)) pairs.push_back(exceptional_pair_to_json(g, p));
  json slabs = json::array();
  for (const auto& r : v.slabs) {
    slabs.push_back({{"max_degree", r.max_degree},
                     {"hole_count", r.holes.size()},
                     {"consistent", r.consistent()}});
  }
  json families = json::array();
  json holes = json::object();
  if (!v.slabs.empty()) {
    for (const auto& f : v.slabs.back().families) families.push_back(hole_family_to_json(g, f));
    holes = per_degree(v.slabs.back().holes);
  }
  return {{"graph", graph_to_json(g)},
          {"type", to_string(v.type)},
          {"exceptional_pairs", pairs},
          {"families", families},
          {"holes_per_degree", holes},
          {"slabs", slabs},
          {"degrees", v.degrees},
          {"verdict", {{"normal", v.normal}, {"s2", to_string(v.s2)}}}};
}

}  // namespace edgering
