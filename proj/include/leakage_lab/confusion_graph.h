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

#ifndef LEAKAGE_LAB_CONFUSION_GRAPH_H_
#define LEAKAGE_LAB_CONFUSION_GRAPH_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "leakage_lab/max_clique.h"
#include "leakage_lab/mechanism.h"
#include "leakage_lab/system_spec.h"

namespace leakage_lab {

inline constexpr int kDefaultMaxGraphVertices = 1 << 20;

// Two realizations are confusable when some user must tell them apart: they
// differ on the user's must-decode sources and agree on its side information.
bool Confusable(const SystemSpec& spec, int x1, int x2);

// One vertex per packed realization; an edge joins every confusable pair.
class ConfusionGraph {
 public:
  static absl::StatusOr<ConfusionGraph> Build(
      const SystemSpec& spec, int max_vertices = kDefaultMaxGraphVertices);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  bool Adjacent(int a, int b) const { return adjacency_[a].test(b); }
  const Bitset& Neighbors(int v) const { return adjacency_[v]; }
  const std::vector<Bitset>& adjacency() const { return adjacency_; }
  int EdgeCount() const;

  // Graphviz rendering with vertices labeled by their coordinates.
  std::string ToDot(const RealizationSpace& space) const;

 private:
  explicit ConfusionGraph(std::vector<Bitset> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<Bitset> adjacency_;
};

// The subgraph induced by every realization that extends x_S. Vertex k of the
// subgraph is realization `vertices[k]`.
struct InducedSubgraph {
  SourceSet fixed_set;
  int fixed_value = 0;
  std::vector<int> vertices;
  std::vector<Bitset> adjacency;
};

InducedSubgraph Induce(const SystemSpec& spec, const ConfusionGraph& graph,
                       SourceSet fixed_set, int fixed_value);

int CliqueNumber(const InducedSubgraph& subgraph);

// log2 of the clique number of the subgraph fixing X_P to its all-zero
// symbols. Every choice of x_P gives an isomorphic subgraph.
absl::StatusOr<double> Theorem1Bound(const SystemSpec& spec);
double Theorem1Bound(const SystemSpec& spec, const ConfusionGraph& graph);

// True iff no cell holds a confusable pair, which for a deterministic
// mechanism is the same as every user decoding perfectly.
bool Lemma1Holds(const ConfusionGraph& graph,
                 const PartitionMechanism& mechanism);
absl::StatusOr<bool> Lemma1Holds(const SystemSpec& spec,
                                 const PartitionMechanism& mechanism);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_CONFUSION_GRAPH_H_
