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

#include "leakage_lab/greedy_design.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "leakage_lab/mechanism_analysis.h"

namespace leakage_lab {

AgglomerativeDesigner::AgglomerativeDesigner(SystemSpec spec,
                                             ConfusionGraph graph)
    : spec_(std::move(spec)), graph_(std::move(graph)) {
  const RealizationSpace& space = spec_.space();
  const SourceSet p = spec_.adversary_side_info();
  known_pmf_ = spec_.sources().MarginalPmf(p);
  known_index_.resize(space.size());
  for (int x = 0; x < space.size(); ++x) known_index_[x] = space.Project(x, p);

  for (int i = 0; i < spec_.num_users(); ++i) {
    const SourceSet side = spec_.user(i).side_info;
    const SourceSet guess = spec_.guess_set(i);
    UserIndex u;
    u.side_size = space.SubspaceSize(side);
    u.guess_size = space.SubspaceSize(guess);
    u.side.resize(space.size());
    u.guess.resize(space.size());
    for (int x = 0; x < space.size(); ++x) {
      u.side[x] = space.Project(x, side);
      u.guess[x] = space.Project(x, guess);
    }
    std::vector<double> prior = spec_.sources().MarginalPmf(guess);
    u.prior_max = *std::max_element(prior.begin(), prior.end());
    users_.push_back(std::move(u));
  }
}

absl::StatusOr<AgglomerativeDesigner> AgglomerativeDesigner::Create(
    const SystemSpec& spec) {
  if (std::vector<Violation> v = Validate(spec); !v.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid system: ", v.front().message));
  }
  absl::StatusOr<ConfusionGraph> graph = ConfusionGraph::Build(spec);
  if (!graph.ok()) return graph.status();
  return AgglomerativeDesigner(spec, *std::move(graph));
}

// Contribution of one output cell (optionally the union of two cells) to D_i:
//   sum_a P(y, a) log2( max_g P(y, a, g) / P(y, a) / max_g P(g) ).
double AgglomerativeDesigner::UtilityContribution(
    int user, const std::vector<int>& cell_a,
    const std::vector<int>* cell_b) const {
  const UserIndex& u = users_[user];
  std::vector<double> mass(static_cast<size_t>(u.side_size) * u.guess_size,
                           0.0);
  std::vector<int> touched_sides;
  auto add = [&](const std::vector<int>& cell) {
    for (int x : cell) {
      const int a = u.side[x];
      const size_t slot = static_cast<size_t>(a) * u.guess_size + u.guess[x];
      mass[slot] += spec_.sources().Probability(x);
      touched_sides.push_back(a);
    }
  };
  add(cell_a);
  if (cell_b != nullptr) add(*cell_b);
  std::sort(touched_sides.begin(), touched_sides.end());
  touched_sides.erase(std::unique(touched_sides.begin(), touched_sides.end()),
                      touched_sides.end());
  double contribution = 0.0;
  for (int a : touched_sides) {
    double total = 0.0;
    double best = 0.0;
    for (int g = 0; g < u.guess_size; ++g) {
      const double m = mass[static_cast<size_t>(a) * u.guess_size + g];
      total += m;
      best = std::max(best, m);
    }
    contribution += total * std::log2(best / total / u.prior_max);
  }
  return contribution;
}

double AgglomerativeDesigner::KnownMass(const Bitset& support) const {
  double mass = 0.0;
  for (size_t k = support.find_first(); k != Bitset::npos;
       k = support.find_next(k)) {
    mass += known_pmf_[k];
  }
  return mass;
}

std::vector<AgglomerativeDesigner::CellSummary>
AgglomerativeDesigner::Summarize(const PartitionMechanism& mechanism) const {
  const int n = graph_.vertex_count();
  std::vector<CellSummary> out;
  out.reserve(mechanism.num_cells());
  for (const std::vector<int>& cell : mechanism.cells()) {
    CellSummary s{Bitset(n), Bitset(n), Bitset(known_pmf_.size()), {}};
    for (int x : cell) {
      s.members.set(x);
      s.confusable |= graph_.Neighbors(x);
      s.known_support.set(known_index_[x]);
    }
    for (int i = 0; i < spec_.num_users(); ++i) {
      s.utility.push_back(UtilityContribution(i, cell, nullptr));
    }
    out.push_back(std::move(s));
  }
  return out;
}

double AgglomerativeDesigner::Leakage(
    const PartitionMechanism& mechanism) const {
  double total = 0.0;
  for (const CellSummary& s : Summarize(mechanism)) {
    total += KnownMass(s.known_support);
  }
  return std::log2(total);
}

double AgglomerativeDesigner::MergeGain(const PartitionMechanism& mechanism,
                                        int a, int b) const {
  Bitset first(known_pmf_.size());
  Bitset second(known_pmf_.size());
  for (int x : mechanism.cell(a)) first.set(known_index_[x]);
  for (int x : mechanism.cell(b)) second.set(known_index_[x]);
  return KnownMass(first) + KnownMass(second) - KnownMass(first | second);
}

std::vector<double> AgglomerativeDesigner::Utilities(
    const PartitionMechanism& mechanism) const {
  std::vector<double> d(spec_.num_users(), 0.0);
  for (const CellSummary& s : Summarize(mechanism)) {
    for (int i = 0; i < spec_.num_users(); ++i) d[i] += s.utility[i];
  }
  return d;
}

MergeCandidate AgglomerativeDesigner::Evaluate(
    const PartitionMechanism& mechanism, const std::vector<CellSummary>& cells,
    const std::vector<double>& utilities, int a, int b) const {
  MergeCandidate c{.first = a, .second = b};
  // Pairs inside one cell are already non-confusable; only cross pairs can
  // break decoding.
  if (cells[a].confusable.intersects(cells[b].members)) return c;
  const Bitset& sa = cells[a].known_support;
  const Bitset& sb = cells[b].known_support;
  c.gain = KnownMass(sa) + KnownMass(sb) - KnownMass(sa | sb);
  if (c.gain <= kStrictGainThreshold) return c;
  for (int i = 0; i < spec_.num_users(); ++i) {
    const double merged =
        UtilityContribution(i, mechanism.cell(a), &mechanism.cell(b));
    const double d = utilities[i] - cells[a].utility[i] -
                     cells[b].utility[i] + merged;
    if (d < spec_.user(i).gain_threshold - kUtilityTolerance) return c;
  }
  c.feasible = true;
  return c;
}

std::vector<MergeCandidate> AgglomerativeDesigner::Theta(
    const PartitionMechanism& mechanism,
    const std::vector<CellSummary>& cells) const {
  std::vector<double> utilities(spec_.num_users(), 0.0);
  for (const CellSummary& s : cells) {
    for (int i = 0; i < spec_.num_users(); ++i) utilities[i] += s.utility[i];
  }
  std::vector<MergeCandidate> out;
  const int k = mechanism.num_cells();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      MergeCandidate c = Evaluate(mechanism, cells, utilities, a, b);
      if (c.feasible) out.push_back(c);
    }
  }
  return out;
}

std::vector<MergeCandidate> AgglomerativeDesigner::Theta(
    const PartitionMechanism& mechanism) const {
  return Theta(mechanism, Summarize(mechanism));
}

absl::StatusOr<GreedyResult> AgglomerativeDesigner::Run() const {
  return Run(PartitionMechanism::Identity(spec_.space().size()));
}

absl::StatusOr<GreedyResult> AgglomerativeDesigner::Run(
    PartitionMechanism seed) const {
  if (seed.num_realizations() != spec_.space().size()) {
    return absl::InvalidArgumentError("seed partition has the wrong alphabet");
  }
  if (!Lemma1Holds(graph_, seed)) {
    return absl::InvalidArgumentError(
        "seed partition puts confusable realizations in one cell");
  }
  const std::vector<double> seed_utilities = Utilities(seed);
  for (int i = 0; i < spec_.num_users(); ++i) {
    if (seed_utilities[i] <
        spec_.user(i).gain_threshold - kUtilityTolerance) {
      return absl::InvalidArgumentError(
          absl::StrCat("seed partition leaves user ", i + 1,
                       " below its utility threshold"));
    }
  }

  GreedyResult result{.mechanism = std::move(seed),
                      .initial_leakage = 0.0,
                      .final_leakage = 0.0,
                      .trace = {}};
  result.initial_leakage = Leakage(result.mechanism);
  result.final_leakage = result.initial_leakage;
  for (int iteration = 1;; ++iteration) {
    const std::vector<MergeCandidate> theta = Theta(result.mechanism);
    if (theta.empty()) break;
    // Candidates arrive in (first, second) order, so keeping the first
    // strictly better one applies the lexicographic tie-break.
    const MergeCandidate* best = &theta.front();
    for (const MergeCandidate& c : theta) {
      if (c.gain > best->gain + kStrictGainThreshold) best = &c;
    }
    MergeStep step;
    step.iteration = iteration;
    step.first = best->first;
    step.second = best->second;
    result.mechanism = result.mechanism.Merge(best->first, best->second);
    step.merged_cell = result.mechanism.cell(best->first);
    step.leakage_bits = Leakage(result.mechanism);
    step.per_user_utility = Utilities(result.mechanism);
    result.final_leakage = step.leakage_bits;
    result.trace.push_back(std::move(step));
  }
  return result;
}

absl::StatusOr<std::vector<MergeCandidate>> ComputeTheta(
    const SystemSpec& spec, const PartitionMechanism& mechanism) {
  absl::StatusOr<AgglomerativeDesigner> designer =
      AgglomerativeDesigner::Create(spec);
  if (!designer.ok()) return designer.status();
  if (mechanism.num_realizations() != spec.space().size()) {
    return absl::InvalidArgumentError("alphabet mismatch");
  }
  if (!Lemma1Holds(designer->graph(), mechanism)) {
    return absl::FailedPreconditionError(
        "mechanism puts confusable realizations in one cell");
  }
  return designer->Theta(mechanism);
}

absl::StatusOr<double> MergeGain(const SystemSpec& spec,
                                 const PartitionMechanism& mechanism, int a,
                                 int b) {
  if (a == b || a < 0 || b < 0 || a >= mechanism.num_cells() ||
      b >= mechanism.num_cells()) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot merge cells ", a, " and ", b));
  }
  absl::StatusOr<AgglomerativeDesigner> designer =
      AgglomerativeDesigner::Create(spec);
  if (!designer.ok()) return designer.status();
  return designer->MergeGain(mechanism, a, b);
}

absl::StatusOr<GreedyResult> RunAgglomerativeMerging(const SystemSpec& spec) {
  absl::StatusOr<AgglomerativeDesigner> designer =
      AgglomerativeDesigner::Create(spec);
  if (!designer.ok()) return designer.status();
  return designer->Run();
}

}  // namespace leakage_lab
