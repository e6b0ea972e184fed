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

#include "leakage_lab/max_clique.h"

#include <algorithm>
#include <numeric>

namespace leakage_lab {
namespace {

class CliqueSearch {
 public:
  // `adjacency` is relabeled so that vertex 0 has the largest degree; the
  // coloring bound is tighter when dense vertices are colored first.
  explicit CliqueSearch(std::span<const Bitset> adjacency)
      : n_(static_cast<int>(adjacency.size())), order_(n_) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return adjacency[a].count() > adjacency[b].count();
    });
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (int i = 0; i < n_; ++i) {
      const Bitset& row = adjacency[order_[i]];
      for (size_t j = row.find_first(); j != Bitset::npos;
           j = row.find_next(j)) {
        adj_[i].set(position[j]);
      }
    }
  }

  std::vector<int> Run() {
    if (n_ == 0) return {};
    Bitset all(n_);
    all.set();
    std::vector<int> current;
    Expand(current, all);
    std::vector<int> out;
    for (int v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Greedy coloring of `candidates`. Fills `vertices` and `bounds` so that
  // bounds[k] is the number of colors used by vertices[0..k].
  void Color(const Bitset& candidates, std::vector<int>& vertices,
             std::vector<int>& bounds) const {
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset available = uncolored;
      for (size_t v = available.find_first(); v != Bitset::npos;
           v = available.find_next(v)) {
        uncolored.reset(v);
        available &= ~adj_[v];
        vertices.push_back(static_cast<int>(v));
        bounds.push_back(color);
      }
    }
  }

  void Expand(std::vector<int>& current, Bitset candidates) {
    std::vector<int> vertices;
    std::vector<int> bounds;
    Color(candidates, vertices, bounds);
    for (int k = static_cast<int>(vertices.size()) - 1; k >= 0; --k) {
      if (current.size() + bounds[k] <= best_.size()) return;
      const int v = vertices[k];
      current.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        Expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  int n_;
  std::vector<int> order_;
  std::vector<Bitset> adj_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> MaximumClique(std::span<const Bitset> adjacency) {
  return CliqueSearch(adjacency).Run();
}

}  // namespace leakage_lab
