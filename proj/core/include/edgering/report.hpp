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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgering/graph.hpp"

namespace edgering {

struct FamilyRow {
  std::vector<std::int64_t> shift;
  std::string facet_kind;                 // "regular" or "fundamental"
  std::vector<std::string> facet_vertices;
  std::vector<std::int64_t> coefficients;
  std::size_t dimension = 0;
  std::map<std::int64_t, std::size_t> points_per_degree;

  bool operator==(const FamilyRow&) const = default;
};

/// Flat summary of every analysis run on one graph. Fields that do not apply
/// (holes of a normal graph, families outside the cactus class) stay empty.
struct AnalysisReport {
  std::size_t d = 0;
  std::size_t edge_count = 0;
  int diameter = 0;
  bool triangular_cactus = false;
  std::string type;
  bool normal = false;
  std::vector<std::vector<std::vector<std::string>>> exceptional_pairs;
  std::vector<std::string> regular_vertices;
  std::vector<std::vector<std::string>> fundamental_sets;
  int max_degree = 0;
  std::optional<std::map<std::int64_t, std::size_t>> holes_per_degree;
  std::vector<FamilyRow> families;
  std::optional<bool> decomposition_verified;
  std::optional<bool> s2;

  bool operator==(const AnalysisReport&) const = default;
};

void to_json(nlohmann::json& j, const FamilyRow& r);
void from_json(const nlohmann::json& j, FamilyRow& r);
void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

/// Runs the full pipeline up to total degree max_degree. Throws
/// Disconnected, and propagates MethodMismatch when the two normalization
/// enumerations disagree.
AnalysisReport analyze(const Graph& g, int max_degree);

std::string format_report(const AnalysisReport& r);

}  // namespace edgering
