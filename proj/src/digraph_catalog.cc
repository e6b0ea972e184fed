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

#include "leakage_lab/digraph_catalog.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace leakage_lab {
namespace {

// bit_map[k] = destination bit of source bit k under a vertex relabeling.
std::vector<int> BitMap(int n, const std::vector<int>& permutation) {
  std::vector<int> map(n * (n - 1));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      map[ArcBit(n, u, v)] = ArcBit(n, permutation[u], permutation[v]);
    }
  }
  return map;
}

uint32_t Apply(const std::vector<int>& bit_map, uint32_t code) {
  uint32_t out = 0;
  for (uint32_t c = code; c != 0; c &= c - 1) {
    out |= uint32_t{1} << bit_map[std::countr_zero(c)];
  }
  return out;
}

std::vector<std::vector<int>> AllBitMaps(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  do {
    maps.push_back(BitMap(n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

}  // namespace

int ArcBit(int num_vertices, int from, int to) {
  // Row-major index among off-diagonal pairs, then flipped so index 0 is the
  // most significant bit.
  const int index = from * (num_vertices - 1) + (to < from ? to : to - 1);
  return num_vertices * (num_vertices - 1) - 1 - index;
}

bool Digraph::HasArc(int from, int to) const {
  if (from == to) return false;
  return (code_ >> ArcBit(num_vertices_, from, to)) & 1u;
}

int Digraph::NumArcs() const { return std::popcount(code_); }

Digraph Digraph::Relabel(const std::vector<int>& permutation) const {
  return Digraph(num_vertices_,
                 Apply(BitMap(num_vertices_, permutation), code_));
}

Digraph CanonicalForm(const Digraph& graph) {
  uint32_t best = graph.code();
  for (const std::vector<int>& map : AllBitMaps(graph.num_vertices())) {
    best = std::min(best, Apply(map, graph.code()));
  }
  return Digraph(graph.num_vertices(), best);
}

absl::StatusOr<std::vector<Digraph>> GenerateDigraphCatalog(int num_vertices) {
  if (num_vertices < 1) {
    return absl::InvalidArgumentError("a digraph needs at least one vertex");
  }
  if (num_vertices > kMaxCatalogVertices) {
    return absl::InvalidArgumentError(
        absl::StrCat("catalog too large: ", num_vertices,
                     " vertices (at most ", kMaxCatalogVertices, ")"));
  }
  const int bits = num_vertices * (num_vertices - 1);
  const uint32_t count = uint32_t{1} << bits;
  const std::vector<std::vector<int>> maps = AllBitMaps(num_vertices);
  // Scanning codes upward, the first code of each orbit is its minimum, i.e.
  // the canonical form; mark the whole orbit so it is skipped afterwards.
  std::vector<bool> seen(count, false);
  std::vector<Digraph> catalog;
  for (uint32_t code = 0; code < count; ++code) {
    if (seen[code]) continue;
    catalog.emplace_back(num_vertices, code);
    for (const std::vector<int>& map : maps) seen[Apply(map, code)] = true;
  }
  return catalog;
}

}  // namespace leakage_lab
