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

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "edgering/acceptance.hpp"
#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"

namespace th {

using edgering::Graph;
using edgering::LatticeVector;
using edgering::VertexSet;

inline const edgering::Fixtures& fixtures() {
  static const edgering::Fixtures fx = edgering::Fixtures::builtin();
  return fx;
}

inline const Graph& fixture(const std::string& name) { return fixtures().get(name); }

inline VertexSet set(const Graph& g, std::initializer_list<const char*> labels) {
  VertexSet s;
  for (const char* l : labels) s.insert(g.index_of(l));
  return s;
}

inline LatticeVector indicator(const Graph& g, std::initializer_list<const char*> labels) {
  return LatticeVector::indicator(g.vertex_count(), set(g, labels));
}

inline LatticeVector rho(const Graph& g, const char* a, const char* b) {
  return edgering::rho(g.vertex_count(), edgering::Edge{std::min(g.index_of(a), g.index_of(b)),
                                                        std::max(g.index_of(a), g.index_of(b))});
}

inline std::vector<std::string> names(const Graph& g, VertexSet s) {
  std::vector<std::string> out;
  for (auto v : s.to_vector()) out.push_back(g.label(v));
  return out;
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
  return Graph::from_edges(labels, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
  return Graph::from_edges(labels, edges);
}

}  // namespace th
