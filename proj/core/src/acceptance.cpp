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

#include "edgering/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "edgering/error.hpp"
#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"
#include "edgering/hole_families.hpp"
#include "edgering/io.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

namespace {

constexpr int kTruncation = 12;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Graph bowtie() {
  return Graph::from_edges({"v1", "v2", "v3", "v4", "v5"},
                           {{"v1", "v2"}, {"v1", "v3"}, {"v2", "v3"},
                            {"v1", "v4"}, {"v1", "v5"}, {"v4", "v5"}});
}

bool has_cone(const Graph& g) { return is_connected(g) && !is_bipartite(g); }

// Collects failures; an empty log means the criterion passed.
struct Log {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Body = std::function<void(const Fixtures&, Log&)>;

struct Criterion {
  int id;
  std::string suite;
  std::string name;
  Body body;
};

void figure1(const Fixtures& fx, Log& log) {
  const Graph& g = fx.get("BOWTIE");
  auto regular = labels_of(g, regular_vertices(g));
  log.check(regular == std::vector<std::string>{"v2", "v3", "v4", "v5"},
            "BOWTIE regular vertices differ from {v2,v3,v4,v5}");
  std::vector<std::vector<std::string>> singletons;
  for (const auto& t : fundamental_sets(g)) {
    if (t.vertices.size() == 1) singletons.push_back(labels_of(g, t.vertices));
  }
  log.check(singletons == std::vector<std::vector<std::string>>{{"v1"}},
            "BOWTIE single-vertex fundamental sets differ from {v1}");
  log.notes.push_back("regular=" + std::to_string(regular.size()));
}

void normality(const Fixtures& fx, Log& log) {
  for (const char* name : {"TRIANGLE", "FRIEND3", "DIAM3"}) {
    const Graph& g = fx.get(name);
    log.check(is_normal(g), std::string(name) + " should be normal");
    const auto h = holes(g, kTruncation);
    log.check(h.empty(), std::string(name) + " has " + std::to_string(h.size()) + " holes");
  }
  log.check(diameter(fx.get("DIAM3")) == 3, "DIAM3 diameter is not 3");
  for (const char* name : {"T1MIN", "T2MIN"}) {
    log.check(!is_normal(fx.get(name)), std::string(name) + " should not be normal");
  }
}

void decomposition_and_s2(const Fixtures& fx, Log& log) {
  for (const char* name : {"T1MIN", "T2MIN"}) {
    const Graph& g = fx.get(name);
    const std::string tag = name;
    if (!is_connected(g) || diameter(g) != 4) {
      log.check(false, tag + " is not connected with diameter 4");
      continue;
    }
    if (!classify(g).in_class()) {
      log.check(false, tag + " is not a diameter-4 triangular cactus");
      continue;
    }
    const S2Verdict v = s2_verdict(g, kTruncation);
    log.check(!v.normal, tag + " reported normal");
    log.check(v.degrees == std::vector<int>{6, 8, 10, 12}, tag + " slab list unexpected");
    for (const auto& slab : v.slabs) {
      log.check(slab.consistent(), tag + " decomposition mismatch at D=" +
                                       std::to_string(slab.max_degree) + " (missing " +
                                       std::to_string(slab.missing.size()) + ", unexpected " +
                                       std::to_string(slab.unexpected.size()) + ")");
    }
    const std::size_t d = g.vertex_count();
    for (const auto& f : v.slabs.back().families) {
      log.check(f.dimension == d - 1, tag + " family of dimension " + std::to_string(f.dimension));
    }
    log.check(v.s2 == S2Status::kHolds, tag + " s2 verdict " + std::string(to_string(v.s2)));
    log.notes.push_back(tag + " holes=" + std::to_string(v.hole_count) +
                        " families=" + std::to_string(v.slabs.back().families.size()));
  }
}

void lemmas(const Fixtures& fx, Log& log) {
  for (const char* name : {"T1MIN", "T2MIN", "N4A", "N4B"}) {
    const auto checks = audit_lemmas(fx.get(name));
    std::size_t bad = 0;
    for (const auto& c : checks) bad += c.agrees() ? 0 : 1;
    log.check(!checks.empty(), std::string(name) + " produced no lemma inputs");
    log.check(bad == 0, std::string(name) + ": " + std::to_string(bad) + " disagreements");
    log.notes.push_back(std::string(name) + " checks=" + std::to_string(checks.size()));
  }
}

void normalization(const Fixtures& fx, Log& log) {
  for (const auto& [name, g] : fx.all()) {
    if (!has_cone(g)) continue;
    const auto a = normalization_by_cone_filter(g, kTruncation);
    const auto b = normalization_by_closure(g, kTruncation);
    log.check(a == b, name + ": method A has " + std::to_string(a.size()) + " points, method B " +
                          std::to_string(b.size()));
  }
}

void doubling(const Fixtures& fx, Log& log) {
  std::size_t pairs_seen = 0;
  for (const auto& [name, g] : fx.all()) {
    if (!is_connected(g)) continue;
    MembershipOracle oracle(g);
    for (const auto& p : exceptional_pairs(g)) {
      ++pairs_seen;
      const LatticeVector v = pair_vector(g.vertex_count(), p);
      log.check(!oracle.contains(v), name + ": E_C+E_C' is a member for " + v.to_string());
      log.check(oracle.contains(2 * v), name + ": twice E_C+E_C' is not a member for " +
                                            v.to_string());
    }
  }
  log.check(pairs_seen > 0, "no exceptional pairs among the fixtures");
  log.notes.push_back("pairs=" + std::to_string(pairs_seen));
}

void facets(const Fixtures& fx, Log& log) {
  for (const auto& [name, g] : fx.all()) {
    if (!has_cone(g)) continue;
    const std::size_t d = g.vertex_count();
    for (const auto& h : supporting_hyperplanes(g)) {
      const Face f = face_of(g, h);
      log.check(f.dimension == d - 1, name + ": " + h.describe(g) + " has face dimension " +
                                          std::to_string(f.dimension));
    }
  }
}

bool zeta_edge(const Graph& g, const CactusType& t) {
  for (const Edge& e : g.edges()) {
    if (t.zeta.contains(e.u) && t.zeta.contains(e.v)) return true;
  }
  return false;
}

void taxonomy(const Fixtures& fx, Log& log) {
  {
    const Graph& g = fx.get("T1MIN");
    const CactusType t = classify(g);
    log.check(t.tag == CactusTypeTag::kType1, "T1MIN is " + std::string(to_string(t.tag)));
    if (t.layout) {
      const Vertex w = t.layout->w;
      log.check(is_regular_vertex(g, w), "T1MIN hub is not regular");
      log.check(blocks_and_cutpoints(g).cutpoints.contains(w), "T1MIN hub is not a cutpoint");
    }
    log.check(!zeta_edge(g, t), "T1MIN has an edge inside zeta");
  }
  {
    const Graph& g = fx.get("T2MIN");
    const CactusType t = classify(g);
    log.check(t.tag == CactusTypeTag::kType2, "T2MIN is " + std::string(to_string(t.tag)));
    if (t.layout) log.check(!is_regular_vertex(g, t.layout->w), "T2MIN hub is regular");
    std::vector<std::pair<std::string, std::string>> omega;
    for (auto [a, b] : t.omega_pairs) omega.emplace_back(g.label(a), g.label(b));
    log.check(omega == std::vector<std::pair<std::string, std::string>>{{"x5", "x6"}},
              "T2MIN omega pairs differ from [(x5,x6)]");
    log.check(zeta_edge(g, t), "T2MIN has no edge inside zeta");
  }
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "figure1", "bowtie regular vertices and singleton fundamental set", figure1},
      {2, "normality", "normality dichotomy", normality},
      {3, "main", "hole decomposition and (S2) at D=6..12", decomposition_and_s2},
      {4, "lemmas", "lemma closed forms agree with membership oracle", lemmas},
      {5, "normalization", "cone filter equals closure up to degree 12", normalization},
      {6, "doubling", "E_C+E_C' is a hole and its double is a member", doubling},
      {7, "facets", "every supporting hyperplane has face dimension d-1", facets},
      {8, "taxonomy", "Type 1 / Type 2 classification", taxonomy},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& Fixtures::names() {
  static const std::vector<std::string> list = {"BOWTIE", "TRIANGLE", "FRIEND3", "DIAM3",
                                                "T1MIN",  "T2MIN",    "N4A",     "N4B"};
  return list;
}

Fixtures Fixtures::builtin() {
  Fixtures fx;
  fx.graphs_.emplace("BOWTIE", bowtie());
  fx.graphs_.emplace("TRIANGLE", build_triangular_cactus({1, {0, 0}}));
  fx.graphs_.emplace("FRIEND3", build_triangular_cactus({3, {0, 0, 0, 0, 0, 0}}));
  fx.graphs_.emplace("DIAM3", build_triangular_cactus({2, {1, 1, 0, 0}}));
  fx.graphs_.emplace("T1MIN", build_triangular_cactus({2, {1, 0, 1, 0}}));
  fx.graphs_.emplace("T2MIN", build_triangular_cactus({3, {1, 0, 1, 0, 0, 0}}));
  fx.graphs_.emplace("N4A", build_triangular_cactus({4, {1, 0, 1, 0, 1, 0, 0, 0}}));
  fx.graphs_.emplace("N4B", build_triangular_cactus({4, {1, 0, 1, 0, 1, 0, 1, 0}}));
  return fx;
}

Fixtures Fixtures::load(const std::filesystem::path& dir) {
  Fixtures fx;
  for (const auto& name : names()) {
    fx.graphs_.emplace(name, read_graph_file(dir / (lower(name) + ".txt")));
  }
  return fx;
}

const Graph& Fixtures::get(const std::string& name) const {
  auto it = graphs_.find(name);
  if (it == graphs_.end()) throw Error(ErrorCode::kParseError, "unknown fixture " + name);
  return it->second;
}

const std::vector<std::string>& acceptance_suites() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> out;
    for (const auto& c : criteria()) out.push_back(c.suite);
    return out;
  }();
  return list;
}

std::vector<CriterionResult> run_acceptance(const Fixtures& fixtures, const std::string& only) {
  if (!only.empty() && std::find(acceptance_suites().begin(), acceptance_suites().end(), only) ==
                           acceptance_suites().end()) {
    throw Error(ErrorCode::kParseError, "unknown suite " + only);
  }
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!only.empty() && c.suite != only) continue;
    CriterionResult r{c.id, c.suite, c.name, false, ""};
    Log log;
    try {
      c.body(fixtures, log);
    } catch (const std::exception& ex) {
      log.failures.push_back(std::string("exception: ") + ex.what());
    }
    r.passed = log.failures.empty();
    std::ostringstream detail;
    const auto& lines = r.passed ? log.notes : log.failures;
    for (std::size_t i = 0; i < lines.size(); ++i) detail << (i ? "; " : "") << lines[i];
    r.detail = detail.str();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    out << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.id << " (" << r.suite
        << "): " << r.name;
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << '\n';
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

}  // namespace edgering
