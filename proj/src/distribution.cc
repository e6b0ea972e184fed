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

#include "leakage_lab/distribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace leakage_lab {
namespace {

absl::Status CheckPmf(std::span<const double> pmf, bool require_positive) {
  if (pmf.empty()) return absl::InvalidArgumentError("pmf is empty");
  double total = 0.0;
  for (double p : pmf) {
    if (!std::isfinite(p) || p < 0.0 || (require_positive && p <= 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("pmf entry ", p,
                       require_positive ? " is not strictly positive"
                                        : " is negative or not finite"));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("pmf sums to ", total, ", not 1"));
  }
  return absl::OkStatus();
}

}  // namespace

RealizationSpace::RealizationSpace(std::vector<int> alphabet_sizes)
    : sizes_(std::move(alphabet_sizes)), strides_(sizes_.size()) {
  size_ = 1;
  for (int i = num_sources() - 1; i >= 0; --i) {
    strides_[i] = size_;
    size_ *= sizes_[i];
  }
}

int RealizationSpace::SubspaceSize(SourceSet s) const {
  int size = 1;
  for (int i : s.Members()) size *= sizes_[i];
  return size;
}

std::vector<int> RealizationSpace::Unpack(int index) const {
  std::vector<int> coords(sizes_.size());
  for (int i = 0; i < num_sources(); ++i) coords[i] = Coordinate(index, i);
  return coords;
}

int RealizationSpace::Pack(std::span<const int> coordinates) const {
  int index = 0;
  for (int i = 0; i < num_sources(); ++i) {
    index += coordinates[i] * strides_[i];
  }
  return index;
}

int RealizationSpace::Project(int index, SourceSet s) const {
  int out = 0;
  for (int i = 0; i < num_sources(); ++i) {
    if (s.Contains(i)) out = out * sizes_[i] + Coordinate(index, i);
  }
  return out;
}

int RealizationSpace::Combine(SourceSet s, int s_value, int rest_value) const {
  int index = 0;
  for (int i = num_sources() - 1; i >= 0; --i) {
    int digit;
    if (s.Contains(i)) {
      digit = s_value % sizes_[i];
      s_value /= sizes_[i];
    } else {
      digit = rest_value % sizes_[i];
      rest_value /= sizes_[i];
    }
    index += digit * strides_[i];
  }
  return index;
}

absl::StatusOr<SourceDistribution> SourceDistribution::Create(
    std::vector<double> pmf) {
  if (absl::Status s = CheckPmf(pmf, /*require_positive=*/true); !s.ok()) {
    return s;
  }
  return SourceDistribution(std::move(pmf));
}

SourceDistribution SourceDistribution::Uniform(int alphabet_size) {
  return SourceDistribution(
      std::vector<double>(alphabet_size, 1.0 / alphabet_size));
}

absl::StatusOr<SourceDistribution> SourceDistribution::Bernoulli(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Bernoulli parameter ", p, " is outside (0, 1)"));
  }
  return SourceDistribution({1.0 - p, p});
}

ProductDistribution::ProductDistribution(
    std::vector<SourceDistribution> sources)
    : sources_(std::move(sources)) {
  std::vector<int> sizes;
  sizes.reserve(sources_.size());
  for (const auto& s : sources_) sizes.push_back(s.alphabet_size());
  space_ = RealizationSpace(std::move(sizes));
  joint_.assign(space_.size(), 1.0);
  for (int x = 0; x < space_.size(); ++x) {
    for (int i = 0; i < num_sources(); ++i) {
      joint_[x] *= sources_[i].pmf()[space_.Coordinate(x, i)];
    }
  }
}

std::vector<double> ProductDistribution::MarginalPmf(SourceSet s) const {
  std::vector<double> pmf(space_.SubspaceSize(s), 0.0);
  for (int x = 0; x < space_.size(); ++x) {
    pmf[space_.Project(x, s)] += joint_[x];
  }
  return pmf;
}

double ProductDistribution::Entropy(SourceSet s) const {
  double h = 0.0;
  for (int i : s.Members()) h += leakage_lab::Entropy(sources_[i].pmf());
  return h;
}

double ProductDistribution::MinEntropy(SourceSet s) const {
  double h = 0.0;
  for (int i : s.Members()) h += leakage_lab::MinEntropy(sources_[i].pmf());
  return h;
}

absl::StatusOr<JointDistribution> JointDistribution::Create(
    std::vector<int> cardinalities, std::vector<double> pmf) {
  long long expected = 1;
  for (int c : cardinalities) {
    if (c < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("variable cardinality ", c, " is not positive"));
    }
    expected *= c;
  }
  if (static_cast<long long>(pmf.size()) != expected) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pmf has ", pmf.size(), " entries but the variables span ", expected));
  }
  if (absl::Status s = CheckPmf(pmf, /*require_positive=*/false); !s.ok()) {
    return s;
  }
  return JointDistribution(RealizationSpace(std::move(cardinalities)),
                           std::move(pmf));
}

JointDistribution JointDistribution::FromProduct(
    const ProductDistribution& product) {
  std::vector<double> pmf(product.space().size());
  for (int x = 0; x < product.space().size(); ++x) {
    pmf[x] = product.Probability(x);
  }
  return JointDistribution(product.space(), std::move(pmf));
}

absl::StatusOr<JointDistribution> Marginalize(const JointDistribution& joint,
                                              std::span<const int> keep) {
  SourceSet kept;
  for (int v : keep) {
    if (v < 0 || v >= joint.num_variables()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown variable ", v, " in marginalization set"));
    }
    kept = kept.With(v);
  }
  const RealizationSpace& space = joint.space();
  std::vector<int> cards;
  for (int v : kept.Members()) cards.push_back(space.alphabet_sizes()[v]);
  std::vector<double> pmf(space.SubspaceSize(kept), 0.0);
  for (int x = 0; x < space.size(); ++x) {
    pmf[space.Project(x, kept)] += joint.pmf()[x];
  }
  return JointDistribution(RealizationSpace(std::move(cards)), std::move(pmf));
}

double Entropy(std::span<const double> pmf) {
  double h = 0.0;
  for (double p : pmf) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double Entropy(const JointDistribution& dist) { return Entropy(dist.pmf()); }

double MinEntropy(std::span<const double> pmf) {
  if (pmf.empty()) return 0.0;
  return -std::log2(*std::max_element(pmf.begin(), pmf.end()));
}

double MinEntropy(const JointDistribution& dist) {
  return MinEntropy(dist.pmf());
}

absl::StatusOr<double> ConditionalMutualInformation(
    const JointDistribution& joint, std::span<const int> v,
    std::span<const int> y, std::span<const int> z) {
  SourceSet seen;
  for (auto group : {v, y, z}) {
    for (int var : group) {
      if (var < 0 || var >= joint.num_variables()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "variable ", var, " is not part of a ", joint.num_variables(),
            "-variable joint distribution"));
      }
      if (seen.Contains(var)) {
        return absl::InvalidArgumentError(
            absl::StrCat("variable ", var, " appears in more than one set"));
      }
      seen = seen.With(var);
    }
  }
  auto entropy_of = [&](std::initializer_list<std::span<const int>> groups)
      -> absl::StatusOr<double> {
    std::vector<int> keep;
    for (auto g : groups) keep.insert(keep.end(), g.begin(), g.end());
    absl::StatusOr<JointDistribution> m = Marginalize(joint, keep);
    if (!m.ok()) return m.status();
    return Entropy(*m);
  };
  // I(V;Y|Z) = H(V,Z) + H(Y,Z) - H(V,Y,Z) - H(Z).
  absl::StatusOr<double> h_vz = entropy_of({v, z});
  absl::StatusOr<double> h_yz = entropy_of({y, z});
  absl::StatusOr<double> h_vyz = entropy_of({v, y, z});
  absl::StatusOr<double> h_z = entropy_of({z});
  for (const auto* h : {&h_vz, &h_yz, &h_vyz, &h_z}) {
    if (!h->ok()) return h->status();
  }
  double info = *h_vz + *h_yz - *h_vyz - *h_z;
  if (info < -1e-9) {
    return absl::InternalError(
        absl::StrCat("conditional mutual information evaluated to ", info));
  }
  return std::max(info, 0.0);
}

}  // namespace leakage_lab
