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

#ifndef LEAKAGE_LAB_SIMPLEX_H_
#define LEAKAGE_LAB_SIMPLEX_H_

#include <string>
#include <utility>
#include <vector>

namespace leakage_lab {

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  // (variable, coefficient) pairs. Repeated variables are summed.
  std::vector<std::pair<int, double>> terms;
  RowSense sense = RowSense::kEqual;
  double rhs = 0.0;
};

// minimize objective . x  subject to  constraints,  x >= 0.
struct LinearProgram {
  int num_variables = 0;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> values;
  int pivots = 0;
};

// Dense two-phase tableau simplex. Pivoting follows Bland's rule (lowest
// eligible column enters, ties in the ratio test leave by lowest basic
// variable index), so the result is deterministic and cycling cannot occur.
LpSolution SolveLinearProgram(const LinearProgram& lp);

// Largest violation of any constraint or of x >= 0 at `values`.
double MaxConstraintViolation(const LinearProgram& lp,
                              const std::vector<double>& values);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_SIMPLEX_H_
