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

#include "leakage_lab/json_io.h"

#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace leakage_lab {
namespace {

using nlohmann::json;

absl::StatusOr<SourceSet> ParseIndexSet(const json& j, const std::string& what) {
  if (!j.is_array()) {
    return absl::InvalidArgumentError(absl::StrCat(what, " must be an array"));
  }
  SourceSet s;
  for (const json& e : j) {
    if (!e.is_number_integer()) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " must hold integer source indices"));
    }
    const int one_based = e.get<int>();
    if (one_based < 1 || one_based > kMaxSources) {
      return absl::InvalidArgumentError(absl::StrCat(
          what, " references source ", one_based, " (indices are 1-based)"));
    }
    s = s.With(one_based - 1);
  }
  return s;
}

json IndexSetToJson(SourceSet s) {
  json out = json::array();
  for (int i : s.Members()) out.push_back(i + 1);
  return out;
}

}  // namespace

absl::StatusOr<SystemSpec> SystemFromJson(const json& j) {
  if (!j.is_object() || !j.contains("sources") || !j["sources"].is_array()) {
    return absl::InvalidArgumentError(
        "system file needs a \"sources\" array");
  }
  std::vector<SourceDistribution> sources;
  for (size_t i = 0; i < j["sources"].size(); ++i) {
    const json& s = j["sources"][i];
    if (!s.is_object() || !s.contains("pmf") || !s["pmf"].is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("source ", i + 1, " needs a \"pmf\" array"));
    }
    std::vector<double> pmf;
    for (const json& p : s["pmf"]) {
      if (!p.is_number()) {
        return absl::InvalidArgumentError(
            absl::StrCat("source ", i + 1, ": pmf entries must be numbers"));
      }
      pmf.push_back(p.get<double>());
    }
    absl::StatusOr<SourceDistribution> dist =
        SourceDistribution::Create(std::move(pmf));
    if (!dist.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("source ", i + 1, ": ", dist.status().message()));
    }
    sources.push_back(*std::move(dist));
  }
  if (sources.size() > static_cast<size_t>(kMaxSources)) {
    return absl::InvalidArgumentError(
        absl::StrCat("at most ", kMaxSources, " sources are supported"));
  }

  std::vector<UserSpec> users;
  if (j.contains("users")) {
    if (!j["users"].is_array()) {
      return absl::InvalidArgumentError("\"users\" must be an array");
    }
    for (size_t i = 0; i < j["users"].size(); ++i) {
      const json& u = j["users"][i];
      const std::string who = absl::StrCat("user ", i + 1);
      if (!u.is_object()) {
        return absl::InvalidArgumentError(
            absl::StrCat(who, " must be an object"));
      }
      UserSpec user;
      absl::StatusOr<SourceSet> a =
          ParseIndexSet(u.value("A", json::array()), who + " A");
      if (!a.ok()) return a.status();
      absl::StatusOr<SourceSet> w =
          ParseIndexSet(u.value("W", json::array()), who + " W");
      if (!w.ok()) return w.status();
      user.side_info = *a;
      user.must_decode = *w;
      if (u.contains("d")) {
        if (!u["d"].is_number()) {
          return absl::InvalidArgumentError(
              absl::StrCat(who, ": d must be a number (bits)"));
        }
        user.gain_threshold = u["d"].get<double>();
      }
      users.push_back(user);
    }
  }
  absl::StatusOr<SourceSet> p =
      ParseIndexSet(j.value("P", json::array()), "P");
  if (!p.ok()) return p.status();
  return SystemSpec(ProductDistribution(std::move(sources)), std::move(users),
                    *p);
}

json SystemToJson(const SystemSpec& spec) {
  json out;
  out["sources"] = json::array();
  for (const SourceDistribution& s : spec.sources().sources()) {
    out["sources"].push_back({{"pmf", s.pmf()}});
  }
  out["users"] = json::array();
  for (const UserSpec& u : spec.users()) {
    out["users"].push_back({{"A", IndexSetToJson(u.side_info)},
                            {"W", IndexSetToJson(u.must_decode)},
                            {"d", u.gain_threshold}});
  }
  out["P"] = IndexSetToJson(spec.adversary_side_info());
  return out;
}

absl::StatusOr<MechanismFile> MechanismFromJson(const json& j,
                                                int num_realizations) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("mechanism file must be an object");
  }
  try {
    if (j.contains("cells")) {
      auto cells = j["cells"].get<std::vector<std::vector<int>>>();
      absl::StatusOr<PartitionMechanism> partition =
          PartitionMechanism::Create(num_realizations, std::move(cells));
      if (!partition.ok()) return partition.status();
      return MechanismFile{partition->ToMechanism(), *std::move(partition)};
    }
    if (j.contains("kernel")) {
      auto rows = j["kernel"].get<std::vector<std::vector<double>>>();
      const int outputs = j.contains("outputs")
                              ? j["outputs"].get<int>()
                              : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
      if (static_cast<int>(rows.size()) != num_realizations) {
        return absl::InvalidArgumentError(
            absl::StrCat("alphabet mismatch: kernel has ", rows.size(),
                         " rows, the system has ", num_realizations,
                         " realizations"));
      }
      std::vector<double> kernel;
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != outputs) {
          return absl::InvalidArgumentError(absl::StrCat(
              "every kernel row needs ", outputs, " entries"));
        }
        kernel.insert(kernel.end(), row.begin(), row.end());
      }
      absl::StatusOr<Mechanism> m =
          Mechanism::Create(num_realizations, outputs, std::move(kernel));
      if (!m.ok()) return m.status();
      return MechanismFile{*std::move(m), std::nullopt};
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed mechanism file: ", e.what()));
  }
  return absl::InvalidArgumentError(
      "mechanism file needs \"cells\" or \"kernel\"");
}

json MechanismToJson(const PartitionMechanism& mechanism) {
  return {{"cells", mechanism.cells()}};
}

json MechanismToJson(const Mechanism& mechanism) {
  json rows = json::array();
  for (int x = 0; x < mechanism.num_realizations(); ++x) {
    std::vector<double> row(mechanism.num_outputs());
    for (int y = 0; y < mechanism.num_outputs(); ++y) row[y] = mechanism(x, y);
    rows.push_back(row);
  }
  return {{"outputs", mechanism.num_outputs()}, {"kernel", rows}};
}

json TraceToJson(const std::vector<MergeStep>& trace) {
  json out = json::array();
  for (const MergeStep& s : trace) {
    out.push_back({{"iteration", s.iteration},
                   {"merged", {s.first, s.second}},
                   {"merged_cell", s.merged_cell},
                   {"leakage_bits", s.leakage_bits},
                   {"per_user_D", s.per_user_utility}});
  }
  return out;
}

absl::StatusOr<json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": invalid JSON: ", e.what()));
  }
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open ", path, " for writing"));
  }
  out << text;
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

}  // namespace leakage_lab
