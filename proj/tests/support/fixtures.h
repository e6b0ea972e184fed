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

#ifndef LEAKAGE_LAB_TESTS_SUPPORT_FIXTURES_H_
#define LEAKAGE_LAB_TESTS_SUPPORT_FIXTURES_H_

#include <random>
#include <vector>

#include "leakage_lab/confusion_graph.h"
#include "leakage_lab/mechanism.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab::testing {

// Two uniform bits. Realization index x1x2 with source 1 most significant.
SystemSpec TwoUniformBits(std::vector<UserSpec> users, SourceSet adversary);

// One user decoding X1 with X2 as side information; adversary knows X2.
SystemSpec FixtureT1();
// The same user; adversary knows nothing.
SystemSpec FixtureT2();
// One user decoding X1 without side information, d = 0.5 on X2; adversary
// knows X1.
SystemSpec FixtureT3();

struct RandomSpecOptions {
  int min_sources = 1;
  int max_sources = 4;
  int max_alphabet = 3;
  int max_users = 3;
  int max_realizations = 16;
  // Probability that a user gets a strictly positive threshold.
  double positive_threshold_rate = 0.5;
  // Largest fraction of H_inf(X_G) used as a threshold.
  double max_threshold_fraction = 0.6;
};

// A valid system with random alphabets, pmfs, users and adversary set.
SystemSpec RandomSpec(std::mt19937_64& rng, const RandomSpecOptions& options);

// A uniformly random stochastic kernel with some zero entries.
Mechanism RandomKernel(std::mt19937_64& rng, int num_realizations,
                       int num_outputs);

// A deterministic mechanism whose cells hold no confusable pair, built by
// placing realizations in random order into random admissible cells.
PartitionMechanism RandomDecodingPartition(std::mt19937_64& rng,
                                           const ConfusionGraph& graph);

// A randomized mechanism under which every user decodes: confusable
// realizations get disjoint output supports.
Mechanism RandomDecodingKernel(std::mt19937_64& rng,
                               const ConfusionGraph& graph);

// An arbitrary partition, ignoring decodability.
PartitionMechanism RandomPartition(std::mt19937_64& rng, int num_realizations);

double Uniform01(std::mt19937_64& rng);
int UniformInt(std::mt19937_64& rng, int low, int high);  // inclusive

}  // namespace leakage_lab::testing

#endif  // LEAKAGE_LAB_TESTS_SUPPORT_FIXTURES_H_
