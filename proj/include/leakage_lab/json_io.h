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

#ifndef LEAKAGE_LAB_JSON_IO_H_
#define LEAKAGE_LAB_JSON_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "leakage_lab/greedy_design.h"
#include "leakage_lab/mechanism.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {

// System files:
//   {"sources": [{"pmf": [...]}, ...],
//    "users": [{"A": [...], "W": [...], "d": 0.5}, ...],
//    "P": [...]}
// Source indices are 1-based. "A", "W", "P" default to empty and "d" to 0.
// Parsing checks structure only; call Validate for the system invariants.
absl::StatusOr<SystemSpec> SystemFromJson(const nlohmann::json& j);
nlohmann::json SystemToJson(const SystemSpec& spec);

// Mechanism files hold either a partition of the packed realization indices
// (0-based), {"cells": [[...], ...]}, or a kernel, {"outputs": k, "kernel":
// [[row], ...]} with one row per packed realization.
struct MechanismFile {
  Mechanism kernel;
  // Set when the file used the "cells" form.
  std::optional<PartitionMechanism> partition;
};
absl::StatusOr<MechanismFile> MechanismFromJson(const nlohmann::json& j,
                                                int num_realizations);
nlohmann::json MechanismToJson(const PartitionMechanism& mechanism);
nlohmann::json MechanismToJson(const Mechanism& mechanism);

// [{"iteration", "merged": [y1, y2], "merged_cell", "leakage_bits",
//   "per_user_D"}, ...]
nlohmann::json TraceToJson(const std::vector<MergeStep>& trace);

absl::StatusOr<nlohmann::json> ReadJsonFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, const std::string& text);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_JSON_IO_H_
