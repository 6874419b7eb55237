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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "edgering/acceptance.hpp"
#include "edgering/error.hpp"
#include "edgering/graph.hpp"
#include "edgering/hole_families.hpp"
#include "edgering/io.hpp"
#include "edgering/report.hpp"

namespace {

using namespace edgering;

constexpr int kOk = 0;
constexpr int kAcceptanceFailed = 1;
constexpr int kInputError = 2;
constexpr int kDecompositionMismatch = 3;
constexpr int kMethodMismatch = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kDecompositionMismatch: return kDecompositionMismatch;
    case ErrorCode::kMethodMismatch: return kMethodMismatch;
    default: return kInputError;
  }
}

int degree_cap() {
  if (const char* env = std::getenv("EDGERING_MAX_DEGREE")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, std::string("bad EDGERING_MAX_DEGREE: ") + env);
    }
  }
  return 12;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  out << text;
}

struct GenArgs {
  std::optional<int> n;
  std::vector<int> s;
  std::string spec_file;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  CactusSpec spec;
  if (!a.spec_file.empty()) {
    std::ifstream in(a.spec_file);
    if (!in) throw Error(ErrorCode::kParseError, "cannot open " + a.spec_file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::kParseError, ex.what());
    }
    spec = parse_cactus_spec(j);
  } else {
    spec.n = a.n.value_or(0);
    spec.s = a.s.empty() ? std::vector<int>(static_cast<std::size_t>(std::max(spec.n, 0)) * 2, 0)
                         : a.s;
  }
  const Graph g = build_triangular_cactus(spec);
  const std::string text = format_graph_text(g);
  std::ostream& summary = a.output.empty() ? std::cerr : std::cout;
  if (a.output.empty()) {
    std::cout << text;
  } else {
    write_file(a.output, text);
  }
  summary << "d=" << g.vertex_count() << " diameter=" << diameter(g)
          << " type=" << to_string(classify(g).tag) << '\n';
  return kOk;
}

struct AnalyzeArgs {
  std::string input;
  int degree = 8;
  std::string json;
  std::size_t max_d = 12;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const int cap = degree_cap();
  if (a.degree > cap) {
    throw Error(ErrorCode::kPreconditionViolated,
                "degree " + std::to_string(a.degree) + " exceeds cap " + std::to_string(cap));
  }
  const Graph g = read_graph_file(a.input);
  if (g.vertex_count() > a.max_d) {
    throw Error(ErrorCode::kPreconditionViolated, "graph has " + std::to_string(g.vertex_count()) +
                                                      " vertices, above --max-d " +
                                                      std::to_string(a.max_d));
  }
  const AnalysisReport report = analyze(g, a.degree);
  std::cout << format_report(report);
  if (!a.json.empty()) write_file(a.json, nlohmann::json(report).dump(2) + "\n");
  if (report.decomposition_verified == false) {
    std::cerr << to_string(ErrorCode::kDecompositionMismatch)
              << ": holes differ from the union of families\n";
    return kDecompositionMismatch;
  }
  return kOk;
}

struct VerifyArgs {
  std::string fixtures;
  std::string only;
};

int cmd_verify(const VerifyArgs& a) {
  const Fixtures fx = a.fixtures.empty() ? Fixtures::builtin() : Fixtures::load(a.fixtures);
  const auto results = run_acceptance(fx, a.only);
  std::cout << format_results(results);
  for (const auto& r : results) {
    if (!r.passed) return kAcceptanceFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge rings of graphs: normality, holes and the (S2) condition"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a triangular cactus graph");
  gen_cmd->add_option("--n", gen.n, "Number of triangles through the hub");
  gen_cmd->add_option("--s", gen.s, "Outer triangle counts s_1..s_2n")->delimiter(',');
  gen_cmd->add_option("--spec", gen.spec_file, "JSON file {\"n\":..,\"s\":[..]}");
  gen_cmd->add_option("-o,--output", gen.output, "Graph file to write (stdout if omitted)");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis on a graph file");
  analyze_cmd->add_option("input", analyze_args.input, "Graph file (text or JSON)")->required();
  analyze_cmd->add_option("--degree", analyze_args.degree, "Truncation degree D")
      ->capture_default_str();
  analyze_cmd->add_option("--json", analyze_args.json, "Write the JSON report here");
  analyze_cmd->add_option("--max-d", analyze_args.max_d, "Refuse graphs with more vertices")
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify_cmd->add_option("--fixtures", verify.fixtures, "Directory of fixture graph files");
  verify_cmd->add_option("--only", verify.only, "Run a single suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*analyze_cmd) return cmd_analyze(analyze_args);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
