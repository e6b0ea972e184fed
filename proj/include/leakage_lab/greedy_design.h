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

#ifndef LEAKAGE_LAB_GREEDY_DESIGN_H_
#define LEAKAGE_LAB_GREEDY_DESIGN_H_

#include <vector>

#include "absl/status/statusor.h"
#include "leakage_lab/confusion_graph.h"
#include "leakage_lab/mechanism.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {

// A merge strictly reduces leakage only if its gain exceeds this.
inline constexpr double kStrictGainThreshold = 1e-12;

struct MergeCandidate {
  int first = 0;   // lower cell id
  int second = 0;  // higher cell id
  // 2^L(before) - 2^L(after) = P_P(X_P(first)) + P_P(X_P(second)) -
  // P_P(X_P(merged)).
  double gain = 0.0;
  bool feasible = false;
};

struct MergeStep {
  int iteration = 0;  // 1-based
  int first = 0;      // cell ids before the merge
  int second = 0;
  std::vector<int> merged_cell;  // realizations of the new cell
  double leakage_bits = 0.0;     // after the merge
  std::vector<double> per_user_utility;
};

struct GreedyResult {
  PartitionMechanism mechanism;
  double initial_leakage = 0.0;
  double final_leakage = 0.0;
  std::vector<MergeStep> trace;
};

// Agglomerative merging of output cells. Starting from the identity mapping,
// repeatedly merges the pair of cells with the largest leakage reduction
// among those that keep every user able to decode and above its utility
// threshold; stops when no merge strictly reduces leakage. Ties go to the
// lexicographically smallest (first, second) pair.
class AgglomerativeDesigner {
 public:
  static absl::StatusOr<AgglomerativeDesigner> Create(const SystemSpec& spec);

  const ConfusionGraph& graph() const { return graph_; }

  // Leakage of a deterministic mechanism: log2 sum_y P_P(X_P(y)).
  double Leakage(const PartitionMechanism& mechanism) const;

  double MergeGain(const PartitionMechanism& mechanism, int a, int b) const;

  // D_i of a deterministic mechanism, summed over cells.
  std::vector<double> Utilities(const PartitionMechanism& mechanism) const;

  // Every feasible candidate, ordered by (first, second).
  std::vector<MergeCandidate> Theta(const PartitionMechanism& mechanism) const;

  absl::StatusOr<GreedyResult> Run() const;
  // Starts from `seed` instead of the identity. Seeds that break decoding or
  // a threshold are rejected.
  absl::StatusOr<GreedyResult> Run(PartitionMechanism seed) const;

 private:
  struct UserIndex {
    std::vector<int> side;   // x -> index into X_A
    std::vector<int> guess;  // x -> index into X_G
    int side_size = 1;
    int guess_size = 1;
    double prior_max = 1.0;
  };

  // Per-cell quantities that make candidate evaluation incremental.
  struct CellSummary {
    Bitset members;
    Bitset confusable;     // union of members' neighbors
    Bitset known_support;  // X_P(y) as a set of x_P indices
    std::vector<double> utility;
  };

  AgglomerativeDesigner(SystemSpec spec, ConfusionGraph graph);

  double UtilityContribution(int user, const std::vector<int>& cell_a,
                             const std::vector<int>* cell_b) const;
  double KnownMass(const Bitset& support) const;
  std::vector<CellSummary> Summarize(const PartitionMechanism& mechanism) const;
  MergeCandidate Evaluate(const PartitionMechanism& mechanism,
                          const std::vector<CellSummary>& cells,
                          const std::vector<double>& utilities, int a,
                          int b) const;
  std::vector<MergeCandidate> Theta(
      const PartitionMechanism& mechanism,
      const std::vector<CellSummary>& cells) const;

  SystemSpec spec_;
  ConfusionGraph graph_;
  std::vector<UserIndex> users_;
  std::vector<int> known_index_;  // x -> index into X_P
  std::vector<double> known_pmf_;
};

// Free-function forms of the designer's operations.
absl::StatusOr<std::vector<MergeCandidate>> ComputeTheta(
    const SystemSpec& spec, const PartitionMechanism& mechanism);
absl::StatusOr<double> MergeGain(const SystemSpec& spec,
                                 const PartitionMechanism& mechanism, int a,
                                 int b);
absl::StatusOr<GreedyResult> RunAgglomerativeMerging(const SystemSpec& spec);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_GREEDY_DESIGN_H_
