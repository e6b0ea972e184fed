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

#ifndef LEAKAGE_LAB_DISTRIBUTION_H_
#define LEAKAGE_LAB_DISTRIBUTION_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "leakage_lab/source_set.h"

namespace leakage_lab {

// All information quantities in this library are in bits.

// Tolerance on the total mass of a pmf.
inline constexpr double kNormalizationTolerance = 1e-12;

// Canonical enumeration of a product alphabet X_1 x ... x X_n. Realizations
// are packed in mixed radix with source 0 as the most significant digit.
// The same convention is used for every sub-product X_S, so projecting a
// realization onto S yields an index into X_S.
class RealizationSpace {
 public:
  RealizationSpace() = default;
  explicit RealizationSpace(std::vector<int> alphabet_sizes);

  int num_sources() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& alphabet_sizes() const { return sizes_; }
  // |X_[n]|.
  int size() const { return size_; }
  // |X_S|; 1 for the empty set.
  int SubspaceSize(SourceSet s) const;

  int Coordinate(int index, int source) const {
    return (index / strides_[source]) % sizes_[source];
  }
  std::vector<int> Unpack(int index) const;
  int Pack(std::span<const int> coordinates) const;

  // Index of x_S within X_S.
  int Project(int index, SourceSet s) const;
  // Inverse of projection: the realization whose S part is `s_value` and whose
  // complement part is `rest_value` (indices into X_S and X_{S^c}).
  int Combine(SourceSet s, int s_value, int rest_value) const;

 private:
  std::vector<int> sizes_;
  std::vector<int> strides_;
  int size_ = 1;
};

// The pmf of one source. Every symbol has strictly positive mass.
class SourceDistribution {
 public:
  static absl::StatusOr<SourceDistribution> Create(std::vector<double> pmf);
  static SourceDistribution Uniform(int alphabet_size);
  // P(X = 1) = p on the alphabet {0, 1}.
  static absl::StatusOr<SourceDistribution> Bernoulli(double p);

  int alphabet_size() const { return static_cast<int>(pmf_.size()); }
  const std::vector<double>& pmf() const { return pmf_; }

 private:
  explicit SourceDistribution(std::vector<double> pmf) : pmf_(std::move(pmf)) {}

  std::vector<double> pmf_;
};

// n independent sources.
class ProductDistribution {
 public:
  ProductDistribution() = default;
  explicit ProductDistribution(std::vector<SourceDistribution> sources);

  int num_sources() const { return static_cast<int>(sources_.size()); }
  const std::vector<SourceDistribution>& sources() const { return sources_; }
  const SourceDistribution& source(int i) const { return sources_[i]; }
  const RealizationSpace& space() const { return space_; }

  // P(x_[n]) for a packed realization.
  double Probability(int realization) const { return joint_[realization]; }
  // Pmf of X_S over X_S in canonical order.
  std::vector<double> MarginalPmf(SourceSet s) const;

  // H(X_S) and H_inf(X_S), using independence.
  double Entropy(SourceSet s) const;
  double MinEntropy(SourceSet s) const;

 private:
  std::vector<SourceDistribution> sources_;
  RealizationSpace space_;
  std::vector<double> joint_;
};

// A pmf over an ordered list of discrete variables, flattened in mixed radix
// with variable 0 most significant.
class JointDistribution {
 public:
  static absl::StatusOr<JointDistribution> Create(std::vector<int> cardinalities,
                                                  std::vector<double> pmf);
  static JointDistribution FromProduct(const ProductDistribution& product);

  int num_variables() const { return space_.num_sources(); }
  const std::vector<int>& cardinalities() const {
    return space_.alphabet_sizes();
  }
  const std::vector<double>& pmf() const { return pmf_; }
  const RealizationSpace& space() const { return space_; }

 private:
  friend absl::StatusOr<JointDistribution> Marginalize(
      const JointDistribution& joint, std::span<const int> keep);

  JointDistribution(RealizationSpace space, std::vector<double> pmf)
      : space_(std::move(space)), pmf_(std::move(pmf)) {}

  RealizationSpace space_;
  std::vector<double> pmf_;
};

// Marginal onto `keep` (variable indices). Kept variables retain their
// original relative order. An empty `keep` gives the one-point distribution.
absl::StatusOr<JointDistribution> Marginalize(const JointDistribution& joint,
                                              std::span<const int> keep);

// Shannon entropy, with 0 log 0 = 0.
double Entropy(const JointDistribution& dist);
double Entropy(std::span<const double> pmf);

// -log2 max_x p(x).
double MinEntropy(const JointDistribution& dist);
double MinEntropy(std::span<const double> pmf);

// I(X_V; X_Y | X_Z) where V, Y, Z are disjoint lists of variable indices.
// Small negative round-off (down to -1e-9) is clamped to 0.
absl::StatusOr<double> ConditionalMutualInformation(
    const JointDistribution& joint, std::span<const int> v,
    std::span<const int> y, std::span<const int> z);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_DISTRIBUTION_H_
