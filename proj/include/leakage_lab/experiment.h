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

#ifndef LEAKAGE_LAB_EXPERIMENT_H_
#define LEAKAGE_LAB_EXPERIMENT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "leakage_lab/digraph_catalog.h"
#include "leakage_lab/distribution.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {

// Soundness slack: achieved leakage may fall below the larger lower bound by
// at most this much before a batch is aborted.
inline constexpr double kSoundnessTolerance = 1e-6;
inline constexpr double kRatioOneTolerance = 1e-9;

enum class DigraphMode { kCatalog, kLabeled };
std::string DigraphModeName(DigraphMode mode);
absl::StatusOr<DigraphMode> ParseDigraphMode(const std::string& name);

struct ExperimentConfig {
  int trials = 500;
  int num_sources = 5;
  int num_users = 5;
  int alphabet_size = 2;
  uint64_t seed = 42;
  // Open intervals for the source parameters and the threshold fractions.
  double p_low = 0.0;
  double p_high = 1.0;
  double d_fraction_low = 0.0;
  double d_fraction_high = 1.0;
  int max_adversary_side_info = 2;
  DigraphMode digraph_mode = DigraphMode::kCatalog;
  // 0 picks the hardware concurrency.
  int threads = 0;
};

absl::Status ValidateConfig(const ExperimentConfig& config);

// Portable per-trial stream. Draws do not depend on the standard library's
// distribution implementations.
class TrialRng {
 public:
  TrialRng(uint64_t seed, uint64_t stream);

  uint64_t Next() { return engine_(); }
  // Uniform on the open interval (low, high).
  double UniformOpen(double low, double high);
  // Uniform on {0, ..., bound - 1}; bound must be positive.
  uint64_t UniformInt(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// What a trial drew, kept so a record can be traced back to its system.
struct SystemDraw {
  uint32_t digraph_code = 0;
  std::vector<double> source_params;
  std::vector<double> d_fractions;
  SourceSet adversary_side_info;
};

// Builds the system for a drawn digraph: user i must decode source i, knows
// the in-neighbours of vertex i, and needs d_i = fraction_i * H_inf(X_{G_i}).
// The first num_users vertices carry users.
SystemSpec SystemFromDigraph(const Digraph& graph,
                             std::vector<SourceDistribution> sources,
                             const std::vector<double>& d_fractions,
                             SourceSet adversary_side_info, int num_users);

// Draws one system. `catalog` is required in catalog mode.
absl::StatusOr<SystemSpec> RandomSystem(const ExperimentConfig& config,
                                        TrialRng& rng,
                                        const std::vector<Digraph>* catalog,
                                        SystemDraw* draw = nullptr);

struct TrialRecord {
  int trial = 0;
  double theorem1_bits = 0.0;
  double theorem2_bits = 0.0;
  double alg1_bits = 0.0;
  double ratio = 1.0;
  int merges = 0;
  SystemDraw draw;
  nlohmann::json system;
};

// Bounds, greedy leakage and ratio for one system. Returns AbortedError when
// the achieved leakage undercuts a lower bound.
absl::StatusOr<TrialRecord> EvaluateSystem(const SystemSpec& spec, int trial);

// Ratio buckets. In the cumulative view each "below" count includes every
// trial under that threshold, the R = 1 trials among them.
struct BucketCounts {
  int equal_one = 0;
  int below_1_05 = 0;
  int below_1_1 = 0;
  int below_1_2 = 0;
  int at_least_1_2 = 0;
};

struct DominanceCounts {
  int theorem1_greater = 0;
  int theorem2_greater = 0;
  int equal = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  BucketCounts cumulative;
  BucketCounts disjoint;
  DominanceCounts dominance;
};

// Fills the aggregate counts from report.trials.
void Aggregate(ExperimentReport& report);

absl::StatusOr<ExperimentReport> RunBatch(const ExperimentConfig& config);

nlohmann::json ReportToJson(const ExperimentReport& report);
// Header plus one row per view (cumulative, disjoint); header only when the
// report has no trials.
std::string ReportToCsv(const ExperimentReport& report);

std::string SoftwareVersion();

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_EXPERIMENT_H_
