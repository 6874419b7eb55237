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
#include <map>
#include <string>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Named reference graphs: BOWTIE, TRIANGLE, FRIEND3, DIAM3, T1MIN, T2MIN,
/// N4A, N4B.
class Fixtures {
 public:
  static Fixtures builtin();
  /// Reads <dir>/<name>.txt (lower-case name) for every fixture.
  static Fixtures load(const std::filesystem::path& dir);

  static const std::vector<std::string>& names();

  const Graph& get(const std::string& name) const;
  const std::map<std::string, Graph>& all() const { return graphs_; }

 private:
  std::map<std::string, Graph> graphs_;
};

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suite names, in criterion order.
const std::vector<std::string>& acceptance_suites();

/// Runs every criterion, or only the one whose suite matches `only`.
/// Exceptions raised inside a criterion turn into a failed result.
std::vector<CriterionResult> run_acceptance(const Fixtures& fixtures, const std::string& only = "");

std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace edgering
