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

#ifndef LEAKAGE_LAB_SYSTEM_SPEC_H_
#define LEAKAGE_LAB_SYSTEM_SPEC_H_

#include <string>
#include <vector>

#include "leakage_lab/distribution.h"
#include "leakage_lab/source_set.h"

namespace leakage_lab {

// Slack used wherever a utility value is compared against a threshold.
inline constexpr double kUtilityTolerance = 1e-9;

// Largest realization space a system may span.
inline constexpr int kMaxRealizations = 1 << 24;

// A legitimate user: knows X_A, must decode X_W exactly, and wants a guessing
// gain of at least `gain_threshold` bits on the remaining sources X_G.
struct UserSpec {
  SourceSet side_info;
  SourceSet must_decode;
  double gain_threshold = 0.0;

  // G = complement of (A union W).
  SourceSet GuessSet(int n) const {
    return (side_info | must_decode).Complement(n);
  }
};

// Sources, users, and the adversary's side information P. The adversary's
// unknown set Q is always derived as the complement of P.
class SystemSpec {
 public:
  SystemSpec() = default;
  SystemSpec(ProductDistribution sources, std::vector<UserSpec> users,
             SourceSet adversary_side_info)
      : sources_(std::move(sources)),
        users_(std::move(users)),
        adversary_side_info_(adversary_side_info) {}

  const ProductDistribution& sources() const { return sources_; }
  const RealizationSpace& space() const { return sources_.space(); }
  const std::vector<UserSpec>& users() const { return users_; }
  const UserSpec& user(int i) const { return users_[i]; }
  int num_sources() const { return sources_.num_sources(); }
  int num_users() const { return static_cast<int>(users_.size()); }

  SourceSet adversary_side_info() const { return adversary_side_info_; }
  SourceSet adversary_unknown() const {
    return adversary_side_info_.Complement(num_sources());
  }
  SourceSet guess_set(int user) const {
    return users_[user].GuessSet(num_sources());
  }

 private:
  ProductDistribution sources_;
  std::vector<UserSpec> users_;
  SourceSet adversary_side_info_;
};

struct Violation {
  std::string code;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Violation codes reported by Validate.
inline constexpr char kNoSources[] = "no-sources";
inline constexpr char kTooManySources[] = "too-many-sources";
inline constexpr char kRealizationSpaceTooLarge[] =
    "realization-space-too-large";
inline constexpr char kNoUsers[] = "no-users";
inline constexpr char kIndexOutOfRange[] = "index-out-of-range";
inline constexpr char kMustDecodeOverlapsSideInfo[] =
    "must-decode-overlaps-side-information";
inline constexpr char kNegativeThreshold[] = "threshold-negative";
inline constexpr char kThresholdExceedsMinEntropy[] =
    "threshold-exceeds-min-entropy";

// Every violated invariant of `spec`; empty means valid. Messages use 1-based
// source and user indices.
std::vector<Violation> Validate(const SystemSpec& spec);

// Set arithmetic shared by the converse bounds.
struct UserSets {
  SourceSet guess;             // G_i
  SourceSet decode_unknown;    // W_i and Q
  SourceSet side_unknown;      // A_i and Q
  SourceSet decode_known;      // W_i and P
  SourceSet side_known;        // A_i and P
};

struct DerivedSets {
  SourceSet adversary_unknown;  // Q
  std::vector<UserSets> users;
};

DerivedSets ComputeDerivedSets(const SystemSpec& spec);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_SYSTEM_SPEC_H_
