// Copyright 2026 The Leakage Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: experiment, bounds, design, analyze.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "leakage_lab/confusion_graph.h"
#include "leakage_lab/experiment.h"
#include "leakage_lab/greedy_design.h"
#include "leakage_lab/json_io.h"
#include "leakage_lab/mechanism_analysis.h"
#include "leakage_lab/polymatroid_bound.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSoundness = 3;

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status << "\n";
  if (absl::IsInvalidArgument(status)) return kExitValidation;
  if (absl::IsAborted(status)) return kExitSoundness;
  return kExitError;
}

// Loads and validates a system file; prints violations and returns nullopt on
// failure with the exit code in *exit_code.
std::optional<SystemSpec> LoadSystem(const std::string& path, int* exit_code) {
  absl::StatusOr<json> j = ReadJsonFile(path);
  if (!j.ok()) {
    *exit_code = Fail(j.status());
    return std::nullopt;
  }
  absl::StatusOr<SystemSpec> spec = SystemFromJson(*j);
  if (!spec.ok()) {
    *exit_code = Fail(spec.status());
    return std::nullopt;
  }
  std::vector<Violation> violations = Validate(*spec);
  if (!violations.empty()) {
    for (const Violation& v : violations) {
      std::cerr << path << ": " << v.code << ": " << v.message << "\n";
    }
    *exit_code = kExitValidation;
    return std::nullopt;
  }
  return *std::move(spec);
}

int WriteOrFail(const std::string& path, const std::string& text) {
  absl::Status s = WriteTextFile(path, text);
  return s.ok() ? kExitOk : Fail(s);
}

struct ExperimentArgs {
  ExperimentConfig config;
  std::string digraphs = "catalog";
  std::string out;
  std::string csv;
};

int RunExperiment(ExperimentArgs& args) {
  absl::StatusOr<DigraphMode> mode = ParseDigraphMode(args.digraphs);
  if (!mode.ok()) return Fail(mode.status());
  args.config.digraph_mode = *mode;
  absl::StatusOr<ExperimentReport> report = RunBatch(args.config);
  if (!report.ok()) return Fail(report.status());

  const BucketCounts& c = report->cumulative;
  const BucketCounts& d = report->disjoint;
  std::printf("%-12s %6s %6s %6s %6s %6s\n", "R", "=1", "<1.05", "<1.1",
              "<1.2", ">=1.2");
  std::printf("%-12s %6d %6d %6d %6d %6d\n", "cumulative", c.equal_one,
              c.below_1_05, c.below_1_1, c.below_1_2, c.at_least_1_2);
  std::printf("%-12s %6d %6d %6d %6d %6d\n", "disjoint", d.equal_one,
              d.below_1_05, d.below_1_1, d.below_1_2, d.at_least_1_2);
  std::printf("theorem1 > theorem2: %d, theorem2 > theorem1: %d, equal: %d\n",
              report->dominance.theorem1_greater,
              report->dominance.theorem2_greater, report->dominance.equal);

  if (!args.out.empty()) {
    if (int rc = WriteOrFail(args.out, ReportToJson(*report).dump(2) + "\n");
        rc != kExitOk) {
      return rc;
    }
  }
  if (!args.csv.empty()) return WriteOrFail(args.csv, ReportToCsv(*report));
  return kExitOk;
}

struct BoundsArgs {
  std::string system;
  std::string dot;
  std::string lp_dump;
};

int RunBounds(const BoundsArgs& args) {
  int rc = kExitOk;
  std::optional<SystemSpec> spec = LoadSystem(args.system, &rc);
  if (!spec) return rc;
  absl::StatusOr<ConfusionGraph> graph = ConfusionGraph::Build(*spec);
  if (!graph.ok()) return Fail(graph.status());
  absl::StatusOr<Theorem2Result> thm2 = Theorem2Bound(*spec);
  if (!thm2.ok()) return Fail(thm2.status());

  json out;
  out["units"] = "bits";
  out["theorem1_bits"] = Theorem1Bound(*spec, *graph);
  out["theorem2_bits"] = thm2->bound;
  out["lambda_QP"] = thm2->lambda_qp;
  out["per_user"] = json::array();
  for (const Theorem2UserTerm& t : thm2->per_user) {
    out["per_user"].push_back({{"user", t.user + 1},
                               {"d", t.threshold},
                               {"H_W_and_Q", t.decode_entropy},
                               {"lambda", t.lambda},
                               {"total", t.total}});
  }
  out["confusion_graph"] = {{"vertices", graph->vertex_count()},
                            {"edges", graph->EdgeCount()}};
  std::cout << out.dump(2) << "\n";

  if (!args.dot.empty()) {
    if ((rc = WriteOrFail(args.dot, graph->ToDot(spec->space()))) != kExitOk) {
      return rc;
    }
  }
  if (!args.lp_dump.empty()) {
    absl::StatusOr<PolymatroidProgram> program = BuildPolymatroidProgram(
        *spec, spec->adversary_unknown(), spec->adversary_side_info());
    if (!program.ok()) return Fail(program.status());
    return WriteOrFail(args.lp_dump, DumpProgram(*program));
  }
  return kExitOk;
}

struct DesignArgs {
  std::string system;
  std::string out;
  std::string trace;
};

int RunDesign(const DesignArgs& args) {
  int rc = kExitOk;
  std::optional<SystemSpec> spec = LoadSystem(args.system, &rc);
  if (!spec) return rc;
  absl::StatusOr<GreedyResult> result = RunAgglomerativeMerging(*spec);
  if (!result.ok()) return Fail(result.status());

  json summary = {{"units", "bits"},
                  {"initial_leakage_bits", result->initial_leakage},
                  {"final_leakage_bits", result->final_leakage},
                  {"merges", result->trace.size()},
                  {"outputs", result->mechanism.num_cells()}};
  std::cout << summary.dump(2) << "\n";
  if (!args.out.empty()) {
    rc = WriteOrFail(args.out,
                     MechanismToJson(result->mechanism).dump(2) + "\n");
    if (rc != kExitOk) return rc;
  }
  if (!args.trace.empty()) {
    return WriteOrFail(args.trace, TraceToJson(result->trace).dump(2) + "\n");
  }
  return kExitOk;
}

struct AnalyzeArgs {
  std::string system;
  std::string mechanism;
};

int RunAnalyze(const AnalyzeArgs& args) {
  int rc = kExitOk;
  std::optional<SystemSpec> spec = LoadSystem(args.system, &rc);
  if (!spec) return rc;
  absl::StatusOr<json> mj = ReadJsonFile(args.mechanism);
  if (!mj.ok()) return Fail(mj.status());
  absl::StatusOr<MechanismFile> mech =
      MechanismFromJson(*mj, spec->space().size());
  if (!mech.ok()) return Fail(mech.status());

  absl::StatusOr<double> leakage = MaxLeakage(*spec, mech->kernel);
  if (!leakage.ok()) return Fail(leakage.status());
  absl::StatusOr<ConstraintReport> constraints =
      SatisfiesConstraints(*spec, mech->kernel);
  if (!constraints.ok()) return Fail(constraints.status());

  json out;
  out["units"] = "bits";
  out["max_leakage_bits"] = *leakage;
  out["constraints_satisfied"] = constraints->satisfied;
  out["users"] = json::array();
  for (size_t i = 0; i < constraints->users.size(); ++i) {
    const UserReport& u = constraints->users[i];
    out["users"].push_back({{"user", i + 1},
                            {"D", u.utility},
                            {"d", u.threshold},
                            {"decodes", u.decoded},
                            {"meets_threshold", u.meets_threshold}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Maximal-leakage privacy mechanisms for multi-user systems"};
  app.set_version_flag("--version", SoftwareVersion());
  app.require_subcommand(1);

  ExperimentArgs exp;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Random-system batch with ratio report");
  experiment->add_option("--trials", exp.config.trials, "Number of systems")
      ->capture_default_str();
  experiment->add_option("--seed", exp.config.seed, "64-bit RNG seed")
      ->capture_default_str();
  experiment->add_option("--n", exp.config.num_sources, "Number of sources")
      ->capture_default_str();
  experiment->add_option("--m", exp.config.num_users, "Number of users")
      ->capture_default_str();
  experiment
      ->add_option("--alphabet", exp.config.alphabet_size,
                   "Alphabet size per source")
      ->capture_default_str();
  experiment
      ->add_option("--max-p", exp.config.max_adversary_side_info,
                   "Largest adversary side-information set")
      ->capture_default_str();
  experiment
      ->add_option("--digraphs", exp.digraphs,
                   "Side-information graph sampling: catalog or labeled")
      ->capture_default_str();
  experiment->add_option("--threads", exp.config.threads,
                         "Worker threads (0 = all cores)");
  experiment->add_option("--out", exp.out, "JSON report path");
  experiment->add_option("--csv", exp.csv, "CSV bucket summary path");

  BoundsArgs bounds_args;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Clique and polymatroid lower bounds");
  bounds->add_option("--system", bounds_args.system, "System JSON")
      ->required();
  bounds->add_option("--dot", bounds_args.dot, "Write the confusion graph");
  bounds->add_option("--lp-dump", bounds_args.lp_dump,
                     "Write the Lambda(Q, P) program");

  DesignArgs design_args;
  CLI::App* design =
      app.add_subcommand("design", "Greedy merging mechanism design");
  design->add_option("--system", design_args.system, "System JSON")
      ->required();
  design->add_option("--out", design_args.out, "Mechanism JSON path");
  design->add_option("--trace", design_args.trace, "Merge trace JSON path");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Leakage and utility of a given mechanism");
  analyze->add_option("--system", analyze_args.system, "System JSON")
      ->required();
  analyze->add_option("--mechanism", analyze_args.mechanism, "Mechanism JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  if (*experiment) return RunExperiment(exp);
  if (*bounds) return RunBounds(bounds_args);
  if (*design) return RunDesign(design_args);
  return RunAnalyze(analyze_args);
}

}  // namespace
}  // namespace leakage_lab

int main(int argc, char** argv) { return leakage_lab::Main(argc, argv); }
