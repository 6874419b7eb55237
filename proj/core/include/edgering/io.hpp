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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgering/exceptional.hpp"
#include "edgering/facets.hpp"
#include "edgering/graph.hpp"
#include "edgering/hole_families.hpp"
#include "edgering/lattice.hpp"

namespace edgering {

// Graph text format:
//   d m
//   <label>            (d lines)
//   <label> <label>    (m lines)
// JSON: {"vertices": [...], "edges": [[u, v], ...]}.
// All parsers throw ParseError on malformed input.

Graph parse_graph_text(std::string_view text);
Graph parse_graph_json(const nlohmann::json& j);
/// Picks JSON when the first non-blank character is '{'.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

std::string format_graph_text(const Graph& g);
nlohmann::json graph_to_json(const Graph& g);

/// {"n": 2, "s": [1, 0, 1, 0]}
CactusSpec parse_cactus_spec(const nlohmann::json& j);
nlohmann::json cactus_spec_to_json(const CactusSpec& spec);

std::vector<std::string> labels_of(const Graph& g, VertexSet s);

/// {"kind":"regular","vertex":"w"} or {"kind":"fundamental","T":[...],"coeffs":[...]}
nlohmann::json hyperplane_to_json(const Graph& g, const Hyperplane& h);
nlohmann::json face_to_json(const Graph& g, const Hyperplane& h, const Face& f);

/// Sorted array of coordinate arrays.
nlohmann::json vectors_to_json(std::vector<LatticeVector> vs);

/// One (degree, vector, in_cone, in_lattice, member) record per vector.
nlohmann::json hole_records_json(const Graph& g, const std::vector<LatticeVector>& holes);

nlohmann::json exceptional_pair_to_json(const Graph& g, const ExceptionalPair& p);
nlohmann::json lemma_check_to_json(const Graph& g, const LemmaCheck& c);
nlohmann::json hole_family_to_json(const Graph& g, const HoleFamily& f);
nlohmann::json decomposition_to_json(const Graph& g, const DecompositionReport& r);
/// Evidence bundle: graph, type tag, exceptional pairs, families, hole
/// counts per degree and the verdict.
nlohmann::json s2_evidence_json(const Graph& g, const S2Verdict& v);

}  // namespace edgering
