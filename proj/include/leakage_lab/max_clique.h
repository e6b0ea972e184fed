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

#ifndef LEAKAGE_LAB_MAX_CLIQUE_H_
#define LEAKAGE_LAB_MAX_CLIQUE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "boost/dynamic_bitset.hpp"

namespace leakage_lab {

using Bitset = boost::dynamic_bitset<uint64_t>;

// Exact maximum clique of an undirected graph given as symmetric adjacency
// bitsets without self-loops. Branch and bound over bitsets, pruned with
// greedy sequential coloring. Returns the vertices of one maximum clique in
// increasing order; empty only for the empty graph.
std::vector<int> MaximumClique(std::span<const Bitset> adjacency);

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_MAX_CLIQUE_H_
