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

#include "leakage_lab/confusion_graph.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace leakage_lab {
namespace {

bool Agree(const RealizationSpace& space, int x1, int x2, SourceSet s) {
  for (int i : s.Members()) {
    if (space.Coordinate(x1, i) != space.Coordinate(x2, i)) return false;
  }
  return true;
}

}  // namespace

bool Confusable(const SystemSpec& spec, int x1, int x2) {
  const RealizationSpace& space = spec.space();
  for (const UserSpec& u : spec.users()) {
    if (!Agree(space, x1, x2, u.must_decode) &&
        Agree(space, x1, x2, u.side_info)) {
      return true;
    }
  }
  return false;
}

absl::StatusOr<ConfusionGraph> ConfusionGraph::Build(const SystemSpec& spec,
                                                     int max_vertices) {
  const int n = spec.space().size();
  if (n > max_vertices) {
    return absl::ResourceExhaustedError(
        absl::StrCat("system too large: ", n,
                     " realizations exceed the confusion graph cap of ",
                     max_vertices));
  }
  std::vector<Bitset> adjacency(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (Confusable(spec, a, b)) {
        adjacency[a].set(b);
        adjacency[b].set(a);
      }
    }
  }
  return ConfusionGraph(std::move(adjacency));
}

int ConfusionGraph::EdgeCount() const {
  size_t degree_sum = 0;
  for (const Bitset& row : adjacency_) degree_sum += row.count();
  return static_cast<int>(degree_sum / 2);
}

std::string ConfusionGraph::ToDot(const RealizationSpace& space) const {
  auto label = [&](int x) { return absl::StrJoin(space.Unpack(x), ""); };
  std::string out = "graph confusion {\n";
  for (int a = 0; a < vertex_count(); ++a) {
    absl::StrAppend(&out, "  v", a, " [label=\"", label(a), "\"];\n");
  }
  for (int a = 0; a < vertex_count(); ++a) {
    for (size_t b = adjacency_[a].find_next(a); b != Bitset::npos;
         b = adjacency_[a].find_next(b)) {
      absl::StrAppend(&out, "  v", a, " -- v", b, ";\n");
    }
  }
  out += "}\n";
  return out;
}

InducedSubgraph Induce(const SystemSpec& spec, const ConfusionGraph& graph,
                       SourceSet fixed_set, int fixed_value) {
  const RealizationSpace& space = spec.space();
  const SourceSet rest = fixed_set.Complement(spec.num_sources());
  InducedSubgraph sub;
  sub.fixed_set = fixed_set;
  sub.fixed_value = fixed_value;
  const int count = space.SubspaceSize(rest);
  for (int r = 0; r < count; ++r) {
    sub.vertices.push_back(space.Combine(fixed_set, fixed_value, r));
  }
  sub.adjacency.assign(count, Bitset(count));
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (graph.Adjacent(sub.vertices[a], sub.vertices[b])) {
        sub.adjacency[a].set(b);
        sub.adjacency[b].set(a);
      }
    }
  }
  return sub;
}

int CliqueNumber(const InducedSubgraph& subgraph) {
  return static_cast<int>(MaximumClique(subgraph.adjacency).size());
}

double Theorem1Bound(const SystemSpec& spec, const ConfusionGraph& graph) {
  const InducedSubgraph sub =
      Induce(spec, graph, spec.adversary_side_info(), /*fixed_value=*/0);
  return std::log2(static_cast<double>(CliqueNumber(sub)));
}

absl::StatusOr<double> Theorem1Bound(const SystemSpec& spec) {
  absl::StatusOr<ConfusionGraph> graph = ConfusionGraph::Build(spec);
  if (!graph.ok()) return graph.status();
  return Theorem1Bound(spec, *graph);
}

bool Lemma1Holds(const ConfusionGraph& graph,
                 const PartitionMechanism& mechanism) {
  for (const std::vector<int>& cell : mechanism.cells()) {
    for (size_t a = 0; a < cell.size(); ++a) {
      for (size_t b = a + 1; b < cell.size(); ++b) {
        if (graph.Adjacent(cell[a], cell[b])) return false;
      }
    }
  }
  return true;
}

absl::StatusOr<bool> Lemma1Holds(const SystemSpec& spec,
                                 const PartitionMechanism& mechanism) {
  if (mechanism.num_realizations() != spec.space().size()) {
    return absl::InvalidArgumentError("alphabet mismatch");
  }
  absl::StatusOr<ConfusionGraph> graph = ConfusionGraph::Build(spec);
  if (!graph.ok()) return graph.status();
  return Lemma1Holds(*graph, mechanism);
}

}  // namespace leakage_lab
