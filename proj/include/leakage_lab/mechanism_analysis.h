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

#ifndef LEAKAGE_LAB_MECHANISM_ANALYSIS_H_
#define LEAKAGE_LAB_MECHANISM_ANALYSIS_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "leakage_lab/mechanism.h"
#include "leakage_lab/source_set.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {

// Maximal leakage from X_Q to Y given X_P, in bits:
//   log2 sum_{y, x_P} P(x_P) max_{x_Q} P(y | x_P, x_Q).
// Zero when Q is empty.
absl::StatusOr<double> MaxLeakage(const SystemSpec& spec,
                                  const Mechanism& mechanism);

// Sibson mutual information of order infinity between X_Q and the pair
// (Y, X_P), evaluated from the explicit joint table. Equals MaxLeakage.
absl::StatusOr<double> SibsonInfinity(const SystemSpec& spec,
                                      const Mechanism& mechanism);

// r(X_V -> y | z): the ratio of the MAP success probability for X_V after and
// before observing Y = y, given X_Z = z. `side_value` indexes X_Z.
absl::StatusOr<double> GuessingGain(const SystemSpec& spec,
                                    const Mechanism& mechanism,
                                    SourceSet target, SourceSet side, int output,
                                    int side_value);

// E[log2 r(X_V -> Y | X_Z)] over P_{Y, X_Z}. Outputs with zero mass are
// skipped. Zero when V is empty.
absl::StatusOr<double> ExpectedLogGain(const SystemSpec& spec,
                                       const Mechanism& mechanism,
                                       SourceSet target, SourceSet side);

// log2 E[r(X_V -> Y | X_Z)]; never smaller than ExpectedLogGain.
absl::StatusOr<double> LogExpectedGain(const SystemSpec& spec,
                                       const Mechanism& mechanism,
                                       SourceSet target, SourceSet side);

// D_i = E[log2 r(X_{G_i} -> Y | X_{A_i})].
absl::StatusOr<double> UtilityD(const SystemSpec& spec,
                                const Mechanism& mechanism, int user);

// Whether H(X_{W_i} | Y, X_{A_i}) = 0, i.e. every (y, x_{A_i}) with positive
// probability pins down x_{W_i}.
absl::StatusOr<bool> CheckPerfectDecoding(const SystemSpec& spec,
                                          const Mechanism& mechanism, int user);

struct UserReport {
  double utility = 0.0;    // D_i
  double threshold = 0.0;  // d_i
  bool decoded = false;
  bool meets_threshold = false;
};

struct ConstraintReport {
  bool satisfied = false;
  std::vector<UserReport> users;
};

// Perfect decoding for every user and D_i >= d_i - kUtilityTolerance.
absl::StatusOr<ConstraintReport> SatisfiesConstraints(
    const SystemSpec& spec, const Mechanism& mechanism);

struct Lemma2Term {
  int user = 0;
  double utility = 0.0;              // D_i
  double decode_entropy = 0.0;       // H(X_{W_i and Q})
  double side_information = 0.0;     // I(X_{A_i and Q}; Y | X_P)
  double delta = 0.0;                // sum of the three
};

struct Lemma2Expression {
  double value = 0.0;
  double mutual_information = 0.0;  // I(X_Q; Y | X_P)
  // Users with G_i inside Q, in index order.
  std::vector<Lemma2Term> terms;
};

// max{ I(X_Q; Y | X_P), max_{i : G_i in Q} D_i + H(X_{W_i and Q}) +
// I(X_{A_i and Q}; Y | X_P) }, a lower bound on MaxLeakage for mechanisms that
// let every user decode. Fails with FailedPrecondition otherwise.
absl::StatusOr<Lemma2Expression> Lemma2LowerExpression(
    const SystemSpec& spec, const Mechanism& mechanism);

// I(X_V; Y | X_Z) for the joint distribution induced by the mechanism.
absl::StatusOr<double> MechanismMutualInformation(const SystemSpec& spec,
                                                  const Mechanism& mechanism,
                                                  SourceSet v, SourceSet z);

// H(Y | X_S) for the induced joint distribution.
absl::StatusOr<double> OutputConditionalEntropy(const SystemSpec& spec,
                                                const Mechanism& mechanism,
                                                SourceSet given);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_MECHANISM_ANALYSIS_H_
