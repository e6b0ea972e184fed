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

#include "oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace leakage_lab::testing {
namespace {

// Mixed-radix digits with source 0 most significant.
std::vector<std::vector<int>> AllCoordinates(const SystemSpec& spec) {
  const int n = spec.num_sources();
  std::vector<int> sizes;
  int total = 1;
  for (int i = 0; i < n; ++i) {
    sizes.push_back(spec.sources().source(i).alphabet_size());
    total *= sizes.back();
  }
  std::vector<std::vector<int>> out(total, std::vector<int>(n));
  for (int x = 0; x < total; ++x) {
    int rest = x;
    for (int i = n - 1; i >= 0; --i) {
      out[x][i] = rest % sizes[i];
      rest /= sizes[i];
    }
  }
  return out;
}

std::vector<double> JointPmf(const SystemSpec& spec,
                             const std::vector<std::vector<int>>& coords) {
  std::vector<double> p(coords.size(), 1.0);
  for (size_t x = 0; x < coords.size(); ++x) {
    for (int i = 0; i < spec.num_sources(); ++i) {
      p[x] *= spec.sources().source(i).pmf()[coords[x][i]];
    }
  }
  return p;
}

std::vector<int> Restrict(const std::vector<int>& c, SourceSet s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (s.Contains(i)) out.push_back(c[i]);
  }
  return out;
}

double MarginalMass(const SystemSpec& spec, SourceSet s,
                    const std::vector<int>& restricted) {
  double p = 1.0;
  int k = 0;
  for (int i = 0; i < spec.num_sources(); ++i) {
    if (s.Contains(i)) p *= spec.sources().source(i).pmf()[restricted[k++]];
  }
  return p;
}

double MaxMarginal(const SystemSpec& spec, SourceSet s) {
  double p = 1.0;
  for (int i = 0; i < spec.num_sources(); ++i) {
    if (s.Contains(i)) {
      const auto& pmf = spec.sources().source(i).pmf();
      p *= *std::max_element(pmf.begin(), pmf.end());
    }
  }
  return p;
}

}  // namespace

std::vector<std::vector<bool>> ReferenceConfusion(const SystemSpec& spec) {
  const auto coords = AllCoordinates(spec);
  const int total = static_cast<int>(coords.size());
  std::vector<std::vector<bool>> adj(total, std::vector<bool>(total, false));
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      if (a == b) continue;
      for (const UserSpec& u : spec.users()) {
        bool differ_w = false;
        bool agree_a = true;
        for (int i = 0; i < spec.num_sources(); ++i) {
          if (u.must_decode.Contains(i) && coords[a][i] != coords[b][i]) {
            differ_w = true;
          }
          if (u.side_info.Contains(i) && coords[a][i] != coords[b][i]) {
            agree_a = false;
          }
        }
        if (differ_w && agree_a) adj[a][b] = true;
      }
    }
  }
  return adj;
}

int BruteForceCliqueNumber(const std::vector<std::vector<bool>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  int best = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (((mask >> b) & 1) && !adjacency[a][b]) {
          clique = false;
          break;
        }
      }
    }
    if (clique) best = size;
  }
  return best;
}

int BruteForceInducedCliqueNumber(const SystemSpec& spec, SourceSet fixed_set,
                                  int anchor) {
  const auto coords = AllCoordinates(spec);
  const auto full = ReferenceConfusion(spec);
  const std::vector<int> target = Restrict(coords[anchor], fixed_set);
  std::vector<int> kept;
  for (int x = 0; x < static_cast<int>(coords.size()); ++x) {
    if (Restrict(coords[x], fixed_set) == target) kept.push_back(x);
  }
  std::vector<std::vector<bool>> sub(kept.size(),
                                     std::vector<bool>(kept.size()));
  for (size_t a = 0; a < kept.size(); ++a) {
    for (size_t b = 0; b < kept.size(); ++b) sub[a][b] = full[kept[a]][kept[b]];
  }
  return BruteForceCliqueNumber(sub);
}

double DeterministicTargetLeakage(const SystemSpec& spec,
                                  const Mechanism& mechanism) {
  const auto coords = AllCoordinates(spec);
  const std::vector<double> px = JointPmf(spec, coords);
  const SourceSet p = spec.adversary_side_info();
  const SourceSet q = spec.adversary_unknown();

  // Index the distinct x_P and x_Q values.
  std::map<std::vector<int>, int> p_index, q_index;
  std::vector<int> xp(coords.size()), xq(coords.size());
  for (size_t x = 0; x < coords.size(); ++x) {
    xp[x] = p_index.try_emplace(Restrict(coords[x], p), p_index.size())
                .first->second;
    xq[x] = q_index.try_emplace(Restrict(coords[x], q), q_index.size())
                .first->second;
  }
  const int nq = static_cast<int>(q_index.size());
  const int np = static_cast<int>(p_index.size());
  const int ny = mechanism.num_outputs();
  std::vector<double> q_mass(nq, 0.0);
  for (const auto& [value, idx] : q_index) {
    q_mass[idx] = MarginalMass(spec, q, value);
  }

  // Restricted-growth strings over X_Q.
  std::vector<int> label(nq, 0);
  double best = 0.0;
  std::function<void(int, int)> visit = [&](int pos, int blocks) {
    if (pos == nq) {
      std::vector<double> pu(blocks, 0.0);
      for (int v = 0; v < nq; ++v) pu[label[v]] += q_mass[v];
      const double max_pu = *std::max_element(pu.begin(), pu.end());
      // P(u, y, x_P) for every (y, x_P, u).
      std::vector<double> joint(static_cast<size_t>(ny) * np * blocks, 0.0);
      for (size_t x = 0; x < coords.size(); ++x) {
        for (int y = 0; y < ny; ++y) {
          joint[(static_cast<size_t>(y) * np + xp[x]) * blocks +
                label[xq[x]]] += px[x] * mechanism(x, y);
        }
      }
      double sum = 0.0;
      for (int yz = 0; yz < ny * np; ++yz) {
        double m = 0.0;
        for (int u = 0; u < blocks; ++u) {
          m = std::max(m, joint[static_cast<size_t>(yz) * blocks + u]);
        }
        sum += m;
      }
      // P(u | x_P) = P(u): U is a function of X_Q, independent of X_P.
      best = std::max(best, std::log2(sum / max_pu));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[pos] = b;
      visit(pos + 1, std::max(blocks, b + 1));
    }
  };
  visit(0, 0);
  return best;
}

double ReferencePartitionLeakage(const SystemSpec& spec,
                                 const std::vector<std::vector<int>>& cells) {
  const auto coords = AllCoordinates(spec);
  const SourceSet p = spec.adversary_side_info();
  double total = 0.0;
  for (const auto& cell : cells) {
    std::map<std::vector<int>, bool> seen;
    for (int x : cell) {
      auto key = Restrict(coords[x], p);
      if (seen.emplace(key, true).second) total += MarginalMass(spec, p, key);
    }
  }
  return std::log2(total);
}

double ReferencePartitionUtility(const SystemSpec& spec,
                                 const std::vector<std::vector<int>>& cells,
                                 int user) {
  const auto coords = AllCoordinates(spec);
  const std::vector<double> px = JointPmf(spec, coords);
  const SourceSet a = spec.user(user).side_info;
  const SourceSet g = spec.guess_set(user);
  const double prior_max = MaxMarginal(spec, g);
  double d = 0.0;
  for (const auto& cell : cells) {
    // (x_A) -> (x_G) -> mass within the cell.
    std::map<std::vector<int>, std::map<std::vector<int>, double>> mass;
    for (int x : cell) {
      mass[Restrict(coords[x], a)][Restrict(coords[x], g)] += px[x];
    }
    for (const auto& [xa, by_g] : mass) {
      double total = 0.0, top = 0.0;
      for (const auto& [xg, m] : by_g) {
        total += m;
        top = std::max(top, m);
      }
      d += total * std::log2(top / (total * prior_max));
    }
  }
  return d;
}

ExhaustiveOptimum ExhaustivePartitionOptimum(const SystemSpec& spec) {
  const auto coords = AllCoordinates(spec);
  const std::vector<double> px = JointPmf(spec, coords);
  const int total = static_cast<int>(coords.size());
  const auto conf = ReferenceConfusion(spec);
  const SourceSet p = spec.adversary_side_info();

  std::map<std::vector<int>, int> p_index;
  std::vector<int> xp(total);
  for (int x = 0; x < total; ++x) {
    xp[x] = p_index.try_emplace(Restrict(coords[x], p), p_index.size())
                .first->second;
  }
  std::vector<double> p_mass(p_index.size());
  for (const auto& [value, idx] : p_index) {
    p_mass[idx] = MarginalMass(spec, p, value);
  }
  std::vector<double> suffix_prob(total + 1, 0.0);
  for (int x = total - 1; x >= 0; --x) {
    suffix_prob[x] = suffix_prob[x + 1] + px[x];
  }

  // Utility pruning. For user i, E[r] = sum over cells and x_A of
  // max_{x_G} P(cell, x_A, x_G), divided by max P(x_G). Adding a realization
  // raises that sum by at most its probability, and D_i <= log2 E[r], so a
  // branch whose optimistic E[r] is below 2^{d_i} cannot meet the threshold.
  struct UserTable {
    std::vector<int> cell_index;  // x -> (x_A, x_G) slot
    int slots = 0;
    double prior_max = 1.0;
    double threshold = 0.0;
  };
  std::vector<UserTable> users(spec.num_users());
  for (int i = 0; i < spec.num_users(); ++i) {
    const SourceSet a = spec.user(i).side_info;
    const SourceSet g = spec.guess_set(i);
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> slot;
    for (int x = 0; x < total; ++x) {
      users[i].cell_index.push_back(
          slot.try_emplace({Restrict(coords[x], a), Restrict(coords[x], g)},
                           slot.size())
              .first->second);
    }
    // Slots sharing x_A are grouped for the max over x_G.
    users[i].slots = static_cast<int>(slot.size());
    users[i].prior_max = MaxMarginal(spec, g);
    users[i].threshold = spec.user(i).gain_threshold;
  }
  std::vector<std::vector<int>> slot_side(spec.num_users());
  for (int i = 0; i < spec.num_users(); ++i) {
    const SourceSet a = spec.user(i).side_info;
    std::map<std::vector<int>, int> side;
    slot_side[i].assign(users[i].slots, 0);
    for (int x = 0; x < total; ++x) {
      slot_side[i][users[i].cell_index[x]] =
          side.try_emplace(Restrict(coords[x], a), side.size()).first->second;
    }
  }

  ExhaustiveOptimum best;
  // Identity is always feasible.
  double best_mass = 0.0;
  for (int x = 0; x < total; ++x) best_mass += p_mass[xp[x]];
  best.leakage = std::log2(best_mass);
  for (int x = 0; x < total; ++x) best.cells.push_back({x});

  std::vector<std::vector<int>> cells;
  std::vector<uint32_t> cell_p;
  // cell_slots[c][i][slot] = P(cell c, slot of user i).
  std::vector<std::vector<std::vector<double>>> cell_slots;

  auto jensen_sum = [&](int i) {
    double sum = 0.0;
    std::vector<double> top;
    for (const auto& per_user : cell_slots) {
      top.assign(users[i].slots, 0.0);
      for (int s = 0; s < users[i].slots; ++s) {
        double& m = top[slot_side[i][s]];
        m = std::max(m, per_user[i][s]);
      }
      for (double v : top) sum += v;
    }
    return sum;
  };

  std::function<void(int, double)> place = [&](int pos, double partial) {
    // Each unplaced realization either joins a compatible cell that already
    // holds its x_P value (free) or adds that value's mass to some cell.
    // Realizations with no such cell that are pairwise confusable need
    // distinct cells, so a greedy clique among them gives a lower bound.
    double bound = partial;
    std::vector<std::vector<int>> stranded(p_mass.size());
    for (int x = pos; x < total; ++x) {
      bool free_slot = false;
      for (size_t c = 0; c < cells.size() && !free_slot; ++c) {
        if (!((cell_p[c] >> xp[x]) & 1)) continue;
        bool ok = true;
        for (int other : cells[c]) ok = ok && !conf[x][other];
        free_slot = ok;
      }
      if (!free_slot) stranded[xp[x]].push_back(x);
    }
    for (size_t v = 0; v < stranded.size(); ++v) {
      std::vector<int> clique;
      for (int x : stranded[v]) {
        bool ok = true;
        for (int y : clique) ok = ok && conf[x][y];
        if (ok) clique.push_back(x);
      }
      bound += p_mass[v] * clique.size();
    }
    if (bound >= best_mass - 1e-12) return;
    for (int i = 0; i < spec.num_users(); ++i) {
      if (users[i].threshold <= 0.0) continue;
      const double optimistic =
          (jensen_sum(i) + suffix_prob[pos]) / users[i].prior_max;
      if (std::log2(optimistic) < users[i].threshold - 1e-9) return;
    }
    if (pos == total) {
      ++best.leaves;
      for (int i = 0; i < spec.num_users(); ++i) {
        if (ReferencePartitionUtility(spec, cells, i) <
            spec.user(i).gain_threshold - 1e-9) {
          return;
        }
      }
      best_mass = partial;
      best.leakage = std::log2(partial);
      best.cells = cells;
      return;
    }
    const uint32_t bit = uint32_t{1} << xp[pos];
    auto add = [&](size_t c, double sign) {
      for (int i = 0; i < spec.num_users(); ++i) {
        cell_slots[c][i][users[i].cell_index[pos]] += sign * px[pos];
      }
    };
    for (size_t c = 0; c < cells.size(); ++c) {
      bool ok = true;
      for (int other : cells[c]) ok = ok && !conf[pos][other];
      if (!ok) continue;
      const double added = (cell_p[c] & bit) ? 0.0 : p_mass[xp[pos]];
      const uint32_t saved = cell_p[c];
      const auto saved_slots = cell_slots[c];
      cells[c].push_back(pos);
      cell_p[c] |= bit;
      add(c, 1.0);
      place(pos + 1, partial + added);
      cells[c].pop_back();
      cell_p[c] = saved;
      cell_slots[c] = saved_slots;
    }
    cells.push_back({pos});
    cell_p.push_back(bit);
    cell_slots.emplace_back();
    for (int i = 0; i < spec.num_users(); ++i) {
      cell_slots.back().emplace_back(users[i].slots, 0.0);
    }
    add(cells.size() - 1, 1.0);
    place(pos + 1, partial + p_mass[xp[pos]]);
    cells.pop_back();
    cell_p.pop_back();
    cell_slots.pop_back();
  };
  place(0, 0.0);
  return best;
}

std::vector<double> EntropyWitness(const SystemSpec& spec,
                                   const Mechanism& mechanism) {
  const auto coords = AllCoordinates(spec);
  const std::vector<double> px = JointPmf(spec, coords);
  const int n = spec.num_sources();
  const int ny = mechanism.num_outputs();
  auto cond_entropy = [&](SourceSet given) {
    std::map<std::vector<int>, std::vector<double>> by_given;
    for (size_t x = 0; x < coords.size(); ++x) {
      auto& row = by_given[Restrict(coords[x], given)];
      row.resize(ny, 0.0);
      for (int y = 0; y < ny; ++y) row[y] += px[x] * mechanism(x, y);
    }
    double h = 0.0;
    for (const auto& [key, row] : by_given) {
      double total = 0.0;
      for (double v : row) total += v;
      for (double v : row) {
        if (v > 0.0) h -= v * std::log2(v / total);
      }
    }
    return h;
  };
  const double base = cond_entropy(SourceSet::Full(n));
  std::vector<double> g(size_t{1} << n);
  for (uint32_t mask = 0; mask < g.size(); ++mask) {
    g[mask] = cond_entropy(SourceSet::FromMask(mask).Complement(n)) - base;
  }
  g[0] = 0.0;
  return g;
}

}  // namespace leakage_lab::testing
