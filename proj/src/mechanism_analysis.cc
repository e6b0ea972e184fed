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

#include "leakage_lab/mechanism_analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "leakage_lab/distribution.h"

namespace leakage_lab {
namespace {

absl::Status CheckShape(const SystemSpec& spec, const Mechanism& mechanism) {
  if (mechanism.num_realizations() != spec.space().size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "alphabet mismatch: mechanism has ", mechanism.num_realizations(),
        " input rows but the system has ", spec.space().size(),
        " realizations"));
  }
  return absl::OkStatus();
}

absl::Status CheckUser(const SystemSpec& spec, int user) {
  if (user < 0 || user >= spec.num_users()) {
    return absl::OutOfRangeError(absl::StrCat("no user ", user + 1));
  }
  return absl::OkStatus();
}

// P(X_V = v, X_Z = z, Y = y) laid out as [(y * |X_Z| + z) * |X_V| + v].
struct GainTable {
  int target_size = 1;
  int side_size = 1;
  std::vector<double> mass;
  double prior_max = 1.0;  // max_v P(X_V = v)

  double at(int y, int z, int v) const {
    return mass[(static_cast<size_t>(y) * side_size + z) * target_size + v];
  }
};

GainTable BuildGainTable(const SystemSpec& spec, const Mechanism& mechanism,
                         SourceSet target, SourceSet side) {
  const RealizationSpace& space = spec.space();
  GainTable t;
  t.target_size = space.SubspaceSize(target);
  t.side_size = space.SubspaceSize(side);
  t.mass.assign(static_cast<size_t>(mechanism.num_outputs()) * t.side_size *
                    t.target_size,
                0.0);
  for (int x = 0; x < space.size(); ++x) {
    const double px = spec.sources().Probability(x);
    const int v = space.Project(x, target);
    const int z = space.Project(x, side);
    for (int y = 0; y < mechanism.num_outputs(); ++y) {
      const double k = mechanism(x, y);
      if (k > 0.0) {
        t.mass[(static_cast<size_t>(y) * t.side_size + z) * t.target_size +
               v] += px * k;
      }
    }
  }
  std::vector<double> prior = spec.sources().MarginalPmf(target);
  t.prior_max = *std::max_element(prior.begin(), prior.end());
  return t;
}

// Calls fn(p(y, z), max_v P(v, y, z)) for every (y, z) with positive mass.
template <typename Fn>
void ForEachObservation(const GainTable& t, int num_outputs, Fn fn) {
  for (int y = 0; y < num_outputs; ++y) {
    for (int z = 0; z < t.side_size; ++z) {
      double total = 0.0;
      double best = 0.0;
      for (int v = 0; v < t.target_size; ++v) {
        const double p = t.at(y, z, v);
        total += p;
        best = std::max(best, p);
      }
      if (total > 0.0) fn(total, best);
    }
  }
}

absl::StatusOr<JointDistribution> InducedJoint(const SystemSpec& spec,
                                               const Mechanism& mechanism) {
  std::vector<int> cards = spec.space().alphabet_sizes();
  cards.push_back(mechanism.num_outputs());
  const int k = mechanism.num_outputs();
  std::vector<double> pmf(static_cast<size_t>(spec.space().size()) * k);
  for (int x = 0; x < spec.space().size(); ++x) {
    for (int y = 0; y < k; ++y) {
      pmf[static_cast<size_t>(x) * k + y] =
          spec.sources().Probability(x) * mechanism(x, y);
    }
  }
  return JointDistribution::Create(std::move(cards), std::move(pmf));
}

}  // namespace

absl::StatusOr<double> MaxLeakage(const SystemSpec& spec,
                                  const Mechanism& mechanism) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  const RealizationSpace& space = spec.space();
  const SourceSet p = spec.adversary_side_info();
  const std::vector<double> p_known = spec.sources().MarginalPmf(p);
  std::vector<double> best(p_known.size());
  double total = 0.0;
  for (int y = 0; y < mechanism.num_outputs(); ++y) {
    std::fill(best.begin(), best.end(), 0.0);
    for (int x = 0; x < space.size(); ++x) {
      double& b = best[space.Project(x, p)];
      b = std::max(b, mechanism(x, y));
    }
    for (size_t xp = 0; xp < best.size(); ++xp) total += p_known[xp] * best[xp];
  }
  return std::log2(total);
}

absl::StatusOr<double> SibsonInfinity(const SystemSpec& spec,
                                      const Mechanism& mechanism) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  const RealizationSpace& space = spec.space();
  const SourceSet q = spec.adversary_unknown();
  const SourceSet p = spec.adversary_side_info();
  const int unknown_size = space.SubspaceSize(q);
  const int known_size = space.SubspaceSize(p);
  const int composite_size = mechanism.num_outputs() * known_size;

  // joint[x_Q][(y, x_P)]
  std::vector<double> joint(static_cast<size_t>(unknown_size) * composite_size,
                            0.0);
  for (int x = 0; x < space.size(); ++x) {
    const double px = spec.sources().Probability(x);
    const int xq = space.Project(x, q);
    const int xp = space.Project(x, p);
    for (int y = 0; y < mechanism.num_outputs(); ++y) {
      joint[static_cast<size_t>(xq) * composite_size + y * known_size + xp] +=
          px * mechanism(x, y);
    }
  }
  std::vector<double> marginal(unknown_size, 0.0);
  for (int xq = 0; xq < unknown_size; ++xq) {
    for (int c = 0; c < composite_size; ++c) {
      marginal[xq] += joint[static_cast<size_t>(xq) * composite_size + c];
    }
  }
  double total = 0.0;
  for (int c = 0; c < composite_size; ++c) {
    double best = 0.0;
    for (int xq = 0; xq < unknown_size; ++xq) {
      if (marginal[xq] <= 0.0) continue;
      best = std::max(
          best, joint[static_cast<size_t>(xq) * composite_size + c] /
                    marginal[xq]);
    }
    total += best;
  }
  return std::log2(total);
}

absl::StatusOr<double> GuessingGain(const SystemSpec& spec,
                                    const Mechanism& mechanism,
                                    SourceSet target, SourceSet side,
                                    int output, int side_value) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  if (target.Intersects(side)) {
    return absl::InvalidArgumentError(
        absl::StrCat("target ", target.ToString(), " and side information ",
                     side.ToString(), " overlap"));
  }
  const GainTable t = BuildGainTable(spec, mechanism, target, side);
  if (output < 0 || output >= mechanism.num_outputs() || side_value < 0 ||
      side_value >= t.side_size) {
    return absl::OutOfRangeError("output or side value out of range");
  }
  double total = 0.0;
  double best = 0.0;
  for (int v = 0; v < t.target_size; ++v) {
    total += t.at(output, side_value, v);
    best = std::max(best, t.at(output, side_value, v));
  }
  if (total <= 0.0) {
    return absl::FailedPreconditionError(
        absl::StrCat("undefined conditional: output ", output,
                     " with side value ", side_value, " has zero probability"));
  }
  return best / total / t.prior_max;
}

absl::StatusOr<double> ExpectedLogGain(const SystemSpec& spec,
                                       const Mechanism& mechanism,
                                       SourceSet target, SourceSet side) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  if (target.empty()) return 0.0;
  const GainTable t = BuildGainTable(spec, mechanism, target, side);
  double d = 0.0;
  ForEachObservation(t, mechanism.num_outputs(), [&](double p, double best) {
    d += p * std::log2(best / p / t.prior_max);
  });
  return d;
}

absl::StatusOr<double> LogExpectedGain(const SystemSpec& spec,
                                       const Mechanism& mechanism,
                                       SourceSet target, SourceSet side) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  if (target.empty()) return 0.0;
  const GainTable t = BuildGainTable(spec, mechanism, target, side);
  double expectation = 0.0;
  ForEachObservation(t, mechanism.num_outputs(), [&](double, double best) {
    expectation += best / t.prior_max;
  });
  return std::log2(expectation);
}

absl::StatusOr<double> UtilityD(const SystemSpec& spec,
                                const Mechanism& mechanism, int user) {
  if (absl::Status s = CheckUser(spec, user); !s.ok()) return s;
  return ExpectedLogGain(spec, mechanism, spec.guess_set(user),
                         spec.user(user).side_info);
}

absl::StatusOr<bool> CheckPerfectDecoding(const SystemSpec& spec,
                                          const Mechanism& mechanism,
                                          int user) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  if (absl::Status s = CheckUser(spec, user); !s.ok()) return s;
  const UserSpec& u = spec.user(user);
  if (u.must_decode.empty()) return true;
  const RealizationSpace& space = spec.space();
  std::vector<int> decoded(space.SubspaceSize(u.side_info));
  for (int y = 0; y < mechanism.num_outputs(); ++y) {
    std::fill(decoded.begin(), decoded.end(), -1);
    for (int x = 0; x < space.size(); ++x) {
      if (mechanism(x, y) <= 0.0) continue;
      int& seen = decoded[space.Project(x, u.side_info)];
      const int w = space.Project(x, u.must_decode);
      if (seen == -1) {
        seen = w;
      } else if (seen != w) {
        return false;
      }
    }
  }
  return true;
}

absl::StatusOr<ConstraintReport> SatisfiesConstraints(
    const SystemSpec& spec, const Mechanism& mechanism) {
  ConstraintReport report;
  report.satisfied = true;
  for (int i = 0; i < spec.num_users(); ++i) {
    UserReport r;
    absl::StatusOr<double> d = UtilityD(spec, mechanism, i);
    if (!d.ok()) return d.status();
    absl::StatusOr<bool> decoded = CheckPerfectDecoding(spec, mechanism, i);
    if (!decoded.ok()) return decoded.status();
    r.utility = *d;
    r.threshold = spec.user(i).gain_threshold;
    r.decoded = *decoded;
    r.meets_threshold = r.utility >= r.threshold - kUtilityTolerance;
    report.satisfied = report.satisfied && r.decoded && r.meets_threshold;
    report.users.push_back(r);
  }
  return report;
}

absl::StatusOr<double> MechanismMutualInformation(const SystemSpec& spec,
                                                  const Mechanism& mechanism,
                                                  SourceSet v, SourceSet z) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  absl::StatusOr<JointDistribution> joint = InducedJoint(spec, mechanism);
  if (!joint.ok()) return joint.status();
  const std::vector<int> v_vars = v.Members();
  const std::vector<int> z_vars = z.Members();
  const std::vector<int> y_var = {spec.num_sources()};
  return ConditionalMutualInformation(*joint, v_vars, y_var, z_vars);
}

absl::StatusOr<double> OutputConditionalEntropy(const SystemSpec& spec,
                                                const Mechanism& mechanism,
                                                SourceSet given) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  absl::StatusOr<JointDistribution> joint = InducedJoint(spec, mechanism);
  if (!joint.ok()) return joint.status();
  std::vector<int> keep = given.Members();
  absl::StatusOr<JointDistribution> x_only = Marginalize(*joint, keep);
  keep.push_back(spec.num_sources());
  absl::StatusOr<JointDistribution> with_y = Marginalize(*joint, keep);
  if (!x_only.ok()) return x_only.status();
  if (!with_y.ok()) return with_y.status();
  return Entropy(*with_y) - Entropy(*x_only);
}

absl::StatusOr<Lemma2Expression> Lemma2LowerExpression(
    const SystemSpec& spec, const Mechanism& mechanism) {
  if (absl::Status s = CheckShape(spec, mechanism); !s.ok()) return s;
  for (int i = 0; i < spec.num_users(); ++i) {
    absl::StatusOr<bool> decoded = CheckPerfectDecoding(spec, mechanism, i);
    if (!decoded.ok()) return decoded.status();
    if (!*decoded) {
      return absl::FailedPreconditionError(absl::StrCat(
          "precondition: perfect decoding fails for user ", i + 1));
    }
  }
  const SourceSet q = spec.adversary_unknown();
  const SourceSet p = spec.adversary_side_info();
  Lemma2Expression out;
  absl::StatusOr<double> info = MechanismMutualInformation(spec, mechanism, q, p);
  if (!info.ok()) return info.status();
  out.mutual_information = *info;
  out.value = *info;
  for (int i = 0; i < spec.num_users(); ++i) {
    if (!spec.guess_set(i).IsSubsetOf(q)) continue;
    Lemma2Term term;
    term.user = i;
    absl::StatusOr<double> d = UtilityD(spec, mechanism, i);
    if (!d.ok()) return d.status();
    absl::StatusOr<double> side = MechanismMutualInformation(
        spec, mechanism, spec.user(i).side_info & q, p);
    if (!side.ok()) return side.status();
    term.utility = *d;
    term.decode_entropy = spec.sources().Entropy(spec.user(i).must_decode & q);
    term.side_information = *side;
    term.delta = term.utility + term.decode_entropy + term.side_information;
    out.value = std::max(out.value, term.delta);
    out.terms.push_back(term);
  }
  return out;
}

}  // namespace leakage_lab
