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

#include "leakage_lab/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace leakage_lab {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kFeasibilityTolerance = 1e-8;
constexpr int kMaxPivots = 200000;

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : num_original_(lp.num_variables) {
    const int m = static_cast<int>(lp.constraints.size());
    // Normalize every row to a nonnegative right-hand side. Homogeneous >=
    // rows are negated so they receive a slack instead of an artificial.
    struct Row {
      std::vector<double> coeffs;
      RowSense sense;
      double rhs;
    };
    std::vector<Row> rows;
    rows.reserve(m);
    int num_slacks = 0;
    int num_artificials = 0;
    for (const LinearConstraint& c : lp.constraints) {
      Row row{std::vector<double>(num_original_, 0.0), c.sense, c.rhs};
      for (auto [var, coeff] : c.terms) row.coeffs[var] += coeff;
      if (row.rhs < 0.0 ||
          (row.rhs == 0.0 && row.sense == RowSense::kGreaterEqual)) {
        for (double& a : row.coeffs) a = -a;
        row.rhs = -row.rhs;
        if (row.sense == RowSense::kLessEqual) {
          row.sense = RowSense::kGreaterEqual;
        } else if (row.sense == RowSense::kGreaterEqual) {
          row.sense = RowSense::kLessEqual;
        }
      }
      if (row.sense != RowSense::kEqual) ++num_slacks;
      if (row.sense != RowSense::kLessEqual) ++num_artificials;
      rows.push_back(std::move(row));
    }
    first_artificial_ = num_original_ + num_slacks;
    num_columns_ = first_artificial_ + num_artificials;
    rows_ = m;
    width_ = num_columns_ + 1;
    data_.assign(static_cast<size_t>(rows_ + 1) * width_, 0.0);
    basis_.assign(rows_, -1);

    int slack = num_original_;
    int artificial = first_artificial_;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < num_original_; ++j) at(i, j) = rows[i].coeffs[j];
      at(i, num_columns_) = rows[i].rhs;
      switch (rows[i].sense) {
        case RowSense::kLessEqual:
          at(i, slack) = 1.0;
          basis_[i] = slack++;
          break;
        case RowSense::kGreaterEqual:
          at(i, slack++) = -1.0;
          at(i, artificial) = 1.0;
          basis_[i] = artificial++;
          break;
        case RowSense::kEqual:
          at(i, artificial) = 1.0;
          basis_[i] = artificial++;
          break;
      }
    }
    allowed_.assign(num_columns_, true);
  }

  // Minimizes the sum of artificial variables. Returns false on pivot limit.
  bool PhaseOne(int& pivots) {
    std::vector<double> cost(num_columns_, 0.0);
    for (int j = first_artificial_; j < num_columns_; ++j) cost[j] = 1.0;
    SetObjective(cost);
    return Iterate(pivots) != LpStatus::kIterationLimit;
  }

  double ObjectiveValue() const { return -at(rows_, num_columns_); }

  // Pivots artificial variables out of the basis and bars them from entering.
  void RemoveArtificials(int& pivots) {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (std::abs(at(i, j)) > kPivotTolerance) {
          Pivot(i, j);
          ++pivots;
          break;
        }
      }
      // A row whose artificial cannot leave is redundant; it stays basic at
      // zero and never constrains a ratio test.
    }
    for (int j = first_artificial_; j < num_columns_; ++j) allowed_[j] = false;
  }

  LpStatus PhaseTwo(const std::vector<double>& objective, int& pivots) {
    std::vector<double> cost(num_columns_, 0.0);
    std::copy(objective.begin(), objective.end(), cost.begin());
    SetObjective(cost);
    return Iterate(pivots);
  }

  std::vector<double> OriginalValues() const {
    std::vector<double> x(num_original_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < num_original_) x[basis_[i]] = at(i, num_columns_);
    }
    return x;
  }

 private:
  double& at(int i, int j) { return data_[static_cast<size_t>(i) * width_ + j]; }
  double at(int i, int j) const {
    return data_[static_cast<size_t>(i) * width_ + j];
  }

  // Writes reduced costs and -z into the objective row.
  void SetObjective(const std::vector<double>& cost) {
    for (int j = 0; j < width_; ++j) {
      at(rows_, j) = j < num_columns_ ? cost[j] : 0.0;
    }
    for (int i = 0; i < rows_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(rows_, j) -= cb * at(i, j);
    }
  }

  LpStatus Iterate(int& pivots) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < num_columns_; ++j) {
        if (allowed_[j] && at(rows_, j) < -kPivotTolerance) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;
      int leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        const double a = at(i, entering);
        if (a <= kPivotTolerance) continue;
        const double ratio = at(i, num_columns_) / a;
        if (leaving < 0 || ratio < best_ratio - kPivotTolerance ||
            (ratio <= best_ratio + kPivotTolerance &&
             basis_[i] < basis_[leaving])) {
          best_ratio = std::min(ratio, best_ratio);
          leaving = i;
        }
      }
      if (leaving < 0) return LpStatus::kUnbounded;
      if (++pivots > kMaxPivots) return LpStatus::kIterationLimit;
      Pivot(leaving, entering);
    }
  }

  void Pivot(int r, int c) {
    const double inv = 1.0 / at(r, c);
    double* pivot_row = &data_[static_cast<size_t>(r) * width_];
    for (int j = 0; j < width_; ++j) pivot_row[j] *= inv;
    pivot_row[c] = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double* row = &data_[static_cast<size_t>(i) * width_];
      const double f = row[c];
      if (f == 0.0) continue;
      for (int j = 0; j < width_; ++j) row[j] -= f * pivot_row[j];
      row[c] = 0.0;
    }
    basis_[r] = c;
  }

  int num_original_;
  int first_artificial_ = 0;
  int num_columns_ = 0;
  int rows_ = 0;
  int width_ = 0;
  std::vector<double> data_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

std::string LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

LpSolution SolveLinearProgram(const LinearProgram& lp) {
  LpSolution solution;
  Tableau tableau(lp);
  if (!tableau.PhaseOne(solution.pivots)) {
    solution.status = LpStatus::kIterationLimit;
    return solution;
  }
  if (tableau.ObjectiveValue() > kFeasibilityTolerance) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  tableau.RemoveArtificials(solution.pivots);
  solution.status = tableau.PhaseTwo(lp.objective, solution.pivots);
  if (solution.status != LpStatus::kOptimal) return solution;
  solution.values = tableau.OriginalValues();
  solution.objective_value = 0.0;
  for (int j = 0; j < lp.num_variables; ++j) {
    solution.objective_value += lp.objective[j] * solution.values[j];
  }
  return solution;
}

double MaxConstraintViolation(const LinearProgram& lp,
                              const std::vector<double>& values) {
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, -v);
  for (const LinearConstraint& c : lp.constraints) {
    double lhs = 0.0;
    for (auto [var, coeff] : c.terms) lhs += coeff * values[var];
    double violation = 0.0;
    switch (c.sense) {
      case RowSense::kLessEqual:
        violation = lhs - c.rhs;
        break;
      case RowSense::kGreaterEqual:
        violation = c.rhs - lhs;
        break;
      case RowSense::kEqual:
        violation = std::abs(lhs - c.rhs);
        break;
    }
    worst = std::max(worst, violation);
  }
  return worst;
}

}  // namespace leakage_lab
