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

#include "leakage_lab/mechanism.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace leakage_lab {
namespace {
constexpr double kRowTolerance = 1e-12;
}  // namespace

absl::StatusOr<Mechanism> Mechanism::Create(int num_realizations,
                                            int num_outputs,
                                            std::vector<double> kernel) {
  if (num_realizations < 1 || num_outputs < 1) {
    return absl::InvalidArgumentError(
        "a mechanism needs at least one realization and one output");
  }
  if (kernel.size() != static_cast<size_t>(num_realizations) * num_outputs) {
    return absl::InvalidArgumentError(
        absl::StrCat("kernel has ", kernel.size(), " entries, expected ",
                     num_realizations, " x ", num_outputs));
  }
  for (int x = 0; x < num_realizations; ++x) {
    double row = 0.0;
    for (int y = 0; y < num_outputs; ++y) {
      double p = kernel[static_cast<size_t>(x) * num_outputs + y];
      if (!(p >= 0.0 && p <= 1.0)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "kernel entry (", x, ", ", y, ") = ", p, " is outside [0, 1]"));
      }
      row += p;
    }
    if (std::abs(row - 1.0) > kRowTolerance) {
      return absl::InvalidArgumentError(
          absl::StrCat("kernel row ", x, " sums to ", row));
    }
  }
  return Mechanism(num_realizations, num_outputs, std::move(kernel));
}

Mechanism Mechanism::Identity(int num_realizations) {
  std::vector<double> kernel(
      static_cast<size_t>(num_realizations) * num_realizations, 0.0);
  for (int x = 0; x < num_realizations; ++x) {
    kernel[static_cast<size_t>(x) * num_realizations + x] = 1.0;
  }
  return Mechanism(num_realizations, num_realizations, std::move(kernel));
}

Mechanism Mechanism::Constant(int num_realizations) {
  return Mechanism(num_realizations, 1,
                   std::vector<double>(num_realizations, 1.0));
}

absl::StatusOr<PartitionMechanism> PartitionMechanism::Create(
    int num_realizations, std::vector<std::vector<int>> cells) {
  std::vector<int> cell_of(num_realizations, -1);
  for (int y = 0; y < static_cast<int>(cells.size()); ++y) {
    if (cells[y].empty()) {
      return absl::InvalidArgumentError(absl::StrCat("cell ", y, " is empty"));
    }
    for (int x : cells[y]) {
      if (x < 0 || x >= num_realizations) {
        return absl::InvalidArgumentError(absl::StrCat(
            "cell ", y, " contains realization ", x, " outside [0, ",
            num_realizations, ")"));
      }
      if (cell_of[x] != -1) {
        return absl::InvalidArgumentError(absl::StrCat(
            "realization ", x, " appears in cells ", cell_of[x], " and ", y));
      }
      cell_of[x] = y;
    }
    std::sort(cells[y].begin(), cells[y].end());
  }
  for (int x = 0; x < num_realizations; ++x) {
    if (cell_of[x] == -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("realization ", x, " is not covered by any cell"));
    }
  }
  return PartitionMechanism(std::move(cells), std::move(cell_of));
}

PartitionMechanism PartitionMechanism::Identity(int num_realizations) {
  std::vector<std::vector<int>> cells(num_realizations);
  std::vector<int> cell_of(num_realizations);
  for (int x = 0; x < num_realizations; ++x) {
    cells[x] = {x};
    cell_of[x] = x;
  }
  return PartitionMechanism(std::move(cells), std::move(cell_of));
}

PartitionMechanism PartitionMechanism::Merge(int a, int b) const {
  if (a > b) std::swap(a, b);
  std::vector<std::vector<int>> cells = cells_;
  std::vector<int> merged;
  std::merge(cells[a].begin(), cells[a].end(), cells[b].begin(),
             cells[b].end(), std::back_inserter(merged));
  cells[a] = std::move(merged);
  cells.erase(cells.begin() + b);
  std::vector<int> cell_of(cell_of_.size());
  for (int y = 0; y < static_cast<int>(cells.size()); ++y) {
    for (int x : cells[y]) cell_of[x] = y;
  }
  return PartitionMechanism(std::move(cells), std::move(cell_of));
}

Mechanism PartitionMechanism::ToMechanism() const {
  const int n = num_realizations();
  const int k = num_cells();
  std::vector<double> kernel(static_cast<size_t>(n) * k, 0.0);
  for (int x = 0; x < n; ++x) kernel[static_cast<size_t>(x) * k + cell_of_[x]] = 1.0;
  return *Mechanism::Create(n, k, std::move(kernel));
}

SupportSets ComputeSupports(const Mechanism& mechanism) {
  SupportSets s;
  s.outputs_of_realization.resize(mechanism.num_realizations());
  s.realizations_of_output.resize(mechanism.num_outputs());
  for (int x = 0; x < mechanism.num_realizations(); ++x) {
    for (int y = 0; y < mechanism.num_outputs(); ++y) {
      if (mechanism(x, y) > 0.0) {
        s.outputs_of_realization[x].push_back(y);
        s.realizations_of_output[y].push_back(x);
      }
    }
  }
  return s;
}

}  // namespace leakage_lab
