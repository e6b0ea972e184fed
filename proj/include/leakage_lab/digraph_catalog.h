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

#ifndef LEAKAGE_LAB_DIGRAPH_CATALOG_H_
#define LEAKAGE_LAB_DIGRAPH_CATALOG_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

namespace leakage_lab {

inline constexpr int kMaxCatalogVertices = 5;

// A simple directed graph on n labeled vertices (no self-loops). The arcs are
// encoded as an n(n-1)-bit string over the off-diagonal pairs (u, v) in
// row-major order; the first pair is the most significant bit.
class Digraph {
 public:
  Digraph(int num_vertices, uint32_t code)
      : num_vertices_(num_vertices), code_(code) {}

  int num_vertices() const { return num_vertices_; }
  uint32_t code() const { return code_; }
  bool HasArc(int from, int to) const;
  int NumArcs() const;

  // The same graph with vertex v relabeled to permutation[v].
  Digraph Relabel(const std::vector<int>& permutation) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int num_vertices_;
  uint32_t code_;
};

// Bit position (counted from the least significant end) of arc (from, to).
int ArcBit(int num_vertices, int from, int to);

// Minimum code over all n! relabelings.
Digraph CanonicalForm(const Digraph& graph);

// One canonical representative per isomorphism class, in increasing code
// order. Requires n <= kMaxCatalogVertices.
absl::StatusOr<std::vector<Digraph>> GenerateDigraphCatalog(int num_vertices);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_DIGRAPH_CATALOG_H_
