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

#include "fixtures.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace leakage_lab::testing {

double Uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

int UniformInt(std::mt19937_64& rng, int low, int high) {
  return std::uniform_int_distribution<int>(low, high)(rng);
}

SystemSpec TwoUniformBits(std::vector<UserSpec> users, SourceSet adversary) {
  return SystemSpec(ProductDistribution({SourceDistribution::Uniform(2),
                                         SourceDistribution::Uniform(2)}),
                    std::move(users), adversary);
}

SystemSpec FixtureT1() {
  UserSpec u;
  u.side_info = SourceSet::Of({1});
  u.must_decode = SourceSet::Of({0});
  return TwoUniformBits({u}, SourceSet::Of({1}));
}

SystemSpec FixtureT2() {
  UserSpec u;
  u.side_info = SourceSet::Of({1});
  u.must_decode = SourceSet::Of({0});
  return TwoUniformBits({u}, SourceSet());
}

SystemSpec FixtureT3() {
  UserSpec u;
  u.must_decode = SourceSet::Of({0});
  u.gain_threshold = 0.5;
  return TwoUniformBits({u}, SourceSet::Of({0}));
}

SystemSpec RandomSpec(std::mt19937_64& rng, const RandomSpecOptions& options) {
  const int n = UniformInt(rng, options.min_sources, options.max_sources);
  std::vector<int> sizes(n);
  for (int& k : sizes) k = UniformInt(rng, 2, options.max_alphabet);
  auto total = [&] {
    return std::accumulate(sizes.begin(), sizes.end(), 1,
                           std::multiplies<int>());
  };
  while (total() > options.max_realizations) {
    auto it = std::max_element(sizes.begin(), sizes.end());
    if (*it == 2) break;
    --*it;
  }

  std::vector<SourceDistribution> sources;
  for (int k : sizes) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (double& v : w) {
      v = 0.05 + Uniform01(rng);
      sum += v;
    }
    for (double& v : w) v /= sum;
    sources.push_back(*SourceDistribution::Create(std::move(w)));
  }
  ProductDistribution product(std::move(sources));

  const int m = UniformInt(rng, 1, options.max_users);
  const uint32_t full = (uint32_t{1} << n) - 1;
  std::vector<UserSpec> users;
  for (int i = 0; i < m; ++i) {
    UserSpec u;
    u.must_decode =
        SourceSet::FromMask(static_cast<uint32_t>(UniformInt(rng, 1, full)));
    const uint32_t rest = u.must_decode.Complement(n).mask();
    u.side_info = SourceSet::FromMask(
        rest & static_cast<uint32_t>(UniformInt(rng, 0, full)));
    if (Uniform01(rng) < options.positive_threshold_rate) {
      u.gain_threshold = options.max_threshold_fraction * Uniform01(rng) *
                         product.MinEntropy(u.GuessSet(n));
    }
    users.push_back(u);
  }
  SourceSet adversary;
  for (int i = 0; i < n; ++i) {
    if (Uniform01(rng) < 0.4) adversary = adversary.With(i);
  }
  return SystemSpec(std::move(product), std::move(users), adversary);
}

Mechanism RandomKernel(std::mt19937_64& rng, int num_realizations,
                       int num_outputs) {
  std::vector<double> kernel(num_realizations * num_outputs, 0.0);
  for (int x = 0; x < num_realizations; ++x) {
    double sum = 0.0;
    double* row = &kernel[x * num_outputs];
    for (int y = 0; y < num_outputs; ++y) {
      row[y] = Uniform01(rng) < 0.3 ? 0.0 : Uniform01(rng);
      sum += row[y];
    }
    if (sum == 0.0) {
      row[UniformInt(rng, 0, num_outputs - 1)] = 1.0;
      sum = 1.0;
    }
    for (int y = 0; y < num_outputs; ++y) row[y] /= sum;
  }
  return *Mechanism::Create(num_realizations, num_outputs, std::move(kernel));
}

PartitionMechanism RandomPartition(std::mt19937_64& rng,
                                   int num_realizations) {
  std::vector<std::vector<int>> cells;
  for (int x = 0; x < num_realizations; ++x) {
    const int c = UniformInt(rng, 0, static_cast<int>(cells.size()));
    if (c == static_cast<int>(cells.size())) cells.emplace_back();
    cells[c].push_back(x);
  }
  return *PartitionMechanism::Create(num_realizations, std::move(cells));
}

namespace {

std::vector<int> RandomOrder(std::mt19937_64& rng, int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

PartitionMechanism RandomDecodingPartition(std::mt19937_64& rng,
                                           const ConfusionGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::vector<int>> cells;
  for (int x : RandomOrder(rng, n)) {
    std::vector<int> admissible;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      bool ok = true;
      for (int other : cells[c]) ok = ok && !graph.Adjacent(x, other);
      if (ok) admissible.push_back(c);
    }
    if (admissible.empty() || Uniform01(rng) < 0.25) {
      cells.push_back({x});
    } else {
      cells[admissible[UniformInt(rng, 0, admissible.size() - 1)]].push_back(
          x);
    }
  }
  for (auto& c : cells) std::sort(c.begin(), c.end());
  return *PartitionMechanism::Create(n, std::move(cells));
}

Mechanism RandomDecodingKernel(std::mt19937_64& rng,
                               const ConfusionGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::set<int>> support(n);
  std::vector<bool> placed(n, false);
  int outputs = 0;
  for (int x : RandomOrder(rng, n)) {
    std::set<int> forbidden;
    for (int v = 0; v < n; ++v) {
      if (placed[v] && graph.Adjacent(x, v)) {
        forbidden.insert(support[v].begin(), support[v].end());
      }
    }
    std::vector<int> available;
    for (int y = 0; y < outputs; ++y) {
      if (!forbidden.count(y)) available.push_back(y);
    }
    std::shuffle(available.begin(), available.end(), rng);
    const int take =
        available.empty() ? 0
                          : UniformInt(rng, 1, std::min<int>(2, available.size()));
    for (int k = 0; k < take; ++k) support[x].insert(available[k]);
    if (support[x].empty() || Uniform01(rng) < 0.2) support[x].insert(outputs++);
    placed[x] = true;
  }
  std::vector<double> kernel(n * outputs, 0.0);
  for (int x = 0; x < n; ++x) {
    double sum = 0.0;
    for (int y : support[x]) {
      kernel[x * outputs + y] = 0.1 + Uniform01(rng);
      sum += kernel[x * outputs + y];
    }
    for (int y : support[x]) kernel[x * outputs + y] /= sum;
  }
  return *Mechanism::Create(n, outputs, std::move(kernel));
}

}  // namespace leakage_lab::testing
