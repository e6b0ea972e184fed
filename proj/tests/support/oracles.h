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

#ifndef LEAKAGE_LAB_TESTS_SUPPORT_ORACLES_H_
#define LEAKAGE_LAB_TESTS_SUPPORT_ORACLES_H_

// Slow reference computations that share no code with the library beyond
// the data types.

#include <vector>

#include "leakage_lab/mechanism.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab::testing {

// Pairwise confusability straight from the definition, as a dense matrix.
std::vector<std::vector<bool>> ReferenceConfusion(const SystemSpec& spec);

// Largest clique by checking every vertex subset (n <= 20).
int BruteForceCliqueNumber(const std::vector<std::vector<bool>>& adjacency);

// Largest clique among realizations that agree with `anchor` (a packed
// realization) on fixed_set.
int BruteForceInducedCliqueNumber(const SystemSpec& spec, SourceSet fixed_set,
                                  int anchor);

// Best leakage over deterministic adversary targets U = f(X_Q), enumerating
// every set partition of X_Q's alphabet (|X_Q| <= 9). Never exceeds the
// maximal leakage, and equals it when X_Q is uniform.
double DeterministicTargetLeakage(const SystemSpec& spec,
                                  const Mechanism& mechanism);

// Leakage of a deterministic mechanism from its cells: log2 of the summed
// P_P-mass of the x_P values each cell touches.
double ReferencePartitionLeakage(const SystemSpec& spec,
                                 const std::vector<std::vector<int>>& cells);

// D_i of a deterministic mechanism from the cell contents.
double ReferencePartitionUtility(const SystemSpec& spec,
                                 const std::vector<std::vector<int>>& cells,
                                 int user);

struct ExhaustiveOptimum {
  double leakage = 0.0;
  std::vector<std::vector<int>> cells;
  long long leaves = 0;
};

// Minimum leakage over every partition whose cells contain no confusable
// pair and that meets all utility thresholds. Branch and bound on the
// P_P-mass, which can only grow as realizations are placed.
ExhaustiveOptimum ExhaustivePartitionOptimum(const SystemSpec& spec);

// Polymatroid witness g(S) = H(Y | X_{S^c}) - H(Y | X_[n]) indexed by mask,
// computed from the induced joint table.
std::vector<double> EntropyWitness(const SystemSpec& spec,
                                   const Mechanism& mechanism);

}  // namespace leakage_lab::testing

#endif  // LEAKAGE_LAB_TESTS_SUPPORT_ORACLES_H_
