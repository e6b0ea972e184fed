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

#ifndef LEAKAGE_LAB_POLYMATROID_BOUND_H_
#define LEAKAGE_LAB_POLYMATROID_BOUND_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "leakage_lab/simplex.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {

// Which Shannon-type rows to emit. Elemental rows generate the same cone as
// the all-pairs rows and are far fewer.
enum class PolymatroidForm { kElemental, kAllPairs };

// LP over set functions g on subsets of the sources, one variable per subset
// indexed by its bitmask:
//   g(empty) = 0, g monotone and submodular, and for every user i, nonempty
//   W in W_i and G in (W union A_i)^c:  g(G union W) - g(G) = H(X_W).
// The objective is g(Z^c) - g(Z^c minus V).
struct PolymatroidProgram {
  int ground_set_size = 0;
  SourceSet target;        // V
  SourceSet conditioning;  // Z
  LinearProgram lp;
  std::vector<std::string> row_labels;
  int num_monotonicity_rows = 0;
  int num_submodularity_rows = 0;
  int num_decoding_rows = 0;
};

absl::StatusOr<PolymatroidProgram> BuildPolymatroidProgram(
    const SystemSpec& spec, SourceSet target, SourceSet conditioning,
    PolymatroidForm form = PolymatroidForm::kElemental);

// Solves the program. A non-optimal status is reported in the solution, not
// turned into an error.
LpSolution SolvePolymatroidProgram(const PolymatroidProgram& program);

// Lambda(V, Z): the minimum of the program's objective. Fails if the program
// is not solved to optimality.
absl::StatusOr<double> Lambda(const SystemSpec& spec, SourceSet target,
                              SourceSet conditioning,
                              PolymatroidForm form = PolymatroidForm::kElemental);

struct Theorem2UserTerm {
  int user = 0;
  double threshold = 0.0;       // d_i
  double decode_entropy = 0.0;  // H(X_{W_i and Q})
  double lambda = 0.0;          // Lambda(A_i and Q, P)
  double total = 0.0;
};

struct Theorem2Result {
  double bound = 0.0;
  double lambda_qp = 0.0;  // Lambda(Q, P)
  // Users whose guess set lies inside Q, in index order.
  std::vector<Theorem2UserTerm> per_user;
};

// max{ Lambda(Q, P), max_{i : G_i in Q} d_i + H(X_{W_i and Q}) +
// Lambda(A_i and Q, P) }.
absl::StatusOr<Theorem2Result> Theorem2Bound(const SystemSpec& spec);

// Plain-text listing of the program, one row per line, for cross-checking
// with an external solver.
std::string DumpProgram(const PolymatroidProgram& program);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_POLYMATROID_BOUND_H_
