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

#ifndef LEAKAGE_LAB_MECHANISM_H_
#define LEAKAGE_LAB_MECHANISM_H_

#include <vector>

#include "absl/status/statusor.h"

namespace leakage_lab {

// A privacy mechanism P_{Y|X_[n]}: one row per packed realization, one column
// per output symbol. Rows sum to 1.
class Mechanism {
 public:
  static absl::StatusOr<Mechanism> Create(int num_realizations, int num_outputs,
                                          std::vector<double> kernel);
  // Y = X_[n].
  static Mechanism Identity(int num_realizations);
  // A single output symbol.
  static Mechanism Constant(int num_realizations);

  int num_realizations() const { return num_realizations_; }
  int num_outputs() const { return num_outputs_; }
  // P(y | x).
  double operator()(int x, int y) const {
    return kernel_[static_cast<size_t>(x) * num_outputs_ + y];
  }
  const std::vector<double>& kernel() const { return kernel_; }

 private:
  Mechanism(int num_realizations, int num_outputs, std::vector<double> kernel)
      : num_realizations_(num_realizations),
        num_outputs_(num_outputs),
        kernel_(std::move(kernel)) {}

  int num_realizations_ = 0;
  int num_outputs_ = 0;
  std::vector<double> kernel_;
};

// A deterministic mechanism: the realization space split into cells, one
// output symbol per cell.
class PartitionMechanism {
 public:
  static absl::StatusOr<PartitionMechanism> Create(
      int num_realizations, std::vector<std::vector<int>> cells);
  static PartitionMechanism Identity(int num_realizations);

  int num_realizations() const { return static_cast<int>(cell_of_.size()); }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& cell(int y) const { return cells_[y]; }
  int cell_of(int x) const { return cell_of_[x]; }

  // Replaces cells `a` and `b` by their union. The merged cell keeps the lower
  // of the two ids and the higher id is removed, so cell ids stay ordered by
  // their smallest member.
  PartitionMechanism Merge(int a, int b) const;

  Mechanism ToMechanism() const;

 private:
  PartitionMechanism(std::vector<std::vector<int>> cells,
                     std::vector<int> cell_of)
      : cells_(std::move(cells)), cell_of_(std::move(cell_of)) {}

  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_;
};

// Supports of a kernel: the outputs reachable from each realization and the
// realizations that can produce each output.
struct SupportSets {
  std::vector<std::vector<int>> outputs_of_realization;
  std::vector<std::vector<int>> realizations_of_output;
};

SupportSets ComputeSupports(const Mechanism& mechanism);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_MECHANISM_H_
