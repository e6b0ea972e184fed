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

#include "leakage_lab/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "leakage_lab/confusion_graph.h"
#include "leakage_lab/greedy_design.h"
#include "leakage_lab/json_io.h"
#include "leakage_lab/mechanism_analysis.h"
#include "leakage_lab/polymatroid_bound.h"

#ifndef LEAKAGE_LAB_VERSION
#define LEAKAGE_LAB_VERSION "unknown"
#endif

namespace leakage_lab {
namespace {

using nlohmann::json;

// Labeled digraphs are stored in a 32-bit code.
constexpr int kMaxLabeledVertices = 6;

bool InOpenUnit(double low, double high) {
  return low >= 0.0 && high <= 1.0 && low < high;
}

json BucketsToJson(const BucketCounts& b) {
  return {{"=1", b.equal_one},
          {"<1.05", b.below_1_05},
          {"<1.1", b.below_1_1},
          {"<1.2", b.below_1_2},
          {">=1.2", b.at_least_1_2}};
}

json SetToJson(SourceSet s) {
  json out = json::array();
  for (int i : s.Members()) out.push_back(i + 1);
  return out;
}

json NumberOrNull(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

}  // namespace

std::string DigraphModeName(DigraphMode mode) {
  return mode == DigraphMode::kCatalog ? "catalog" : "labeled";
}

absl::StatusOr<DigraphMode> ParseDigraphMode(const std::string& name) {
  if (name == "catalog") return DigraphMode::kCatalog;
  if (name == "labeled") return DigraphMode::kLabeled;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown digraph mode \"", name,
                   "\" (expected catalog or labeled)"));
}

absl::Status ValidateConfig(const ExperimentConfig& config) {
  if (config.trials < 1) {
    return absl::InvalidArgumentError("trials must be at least 1");
  }
  if (config.num_sources < 1) {
    return absl::InvalidArgumentError("n must be at least 1");
  }
  if (config.num_users < 1 || config.num_users > config.num_sources) {
    return absl::InvalidArgumentError(
        "m must lie in [1, n] since user i must decode source i");
  }
  if (config.alphabet_size < 2) {
    return absl::InvalidArgumentError("alphabet size must be at least 2");
  }
  if (!InOpenUnit(config.p_low, config.p_high)) {
    return absl::InvalidArgumentError("p range must be an interval in (0,1)");
  }
  if (!InOpenUnit(config.d_fraction_low, config.d_fraction_high)) {
    return absl::InvalidArgumentError(
        "threshold fraction range must be an interval in (0,1)");
  }
  if (config.max_adversary_side_info < 0) {
    return absl::InvalidArgumentError("|P| cap must be non-negative");
  }
  if (config.digraph_mode == DigraphMode::kCatalog &&
      config.num_sources > kMaxCatalogVertices) {
    return absl::InvalidArgumentError("catalog too large");
  }
  if (config.num_sources > kMaxLabeledVertices) {
    return absl::InvalidArgumentError(absl::StrCat(
        "random systems support at most ", kMaxLabeledVertices, " sources"));
  }
  if (config.threads < 0) {
    return absl::InvalidArgumentError("threads must be non-negative");
  }
  return absl::OkStatus();
}

TrialRng::TrialRng(uint64_t seed, uint64_t stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream),
                    static_cast<uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double TrialRng::UniformOpen(double low, double high) {
  // 53 random bits, offset by half a step so 0 and 1 are never produced.
  const double u =
      (static_cast<double>(Next() >> 11) + 0.5) * 0x1.0p-53;
  return low + (high - low) * u;
}

uint64_t TrialRng::UniformInt(uint64_t bound) {
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % bound;
  uint64_t v;
  do {
    v = Next();
  } while (v >= limit);
  return v % bound;
}

SystemSpec SystemFromDigraph(const Digraph& graph,
                             std::vector<SourceDistribution> sources,
                             const std::vector<double>& d_fractions,
                             SourceSet adversary_side_info, int num_users) {
  const int n = graph.num_vertices();
  ProductDistribution product(std::move(sources));
  std::vector<UserSpec> users;
  for (int i = 0; i < num_users; ++i) {
    UserSpec u;
    for (int j = 0; j < n; ++j) {
      if (j != i && graph.HasArc(j, i)) u.side_info = u.side_info.With(j);
    }
    u.must_decode = SourceSet::Of({i});
    u.gain_threshold = d_fractions[i] * product.MinEntropy(u.GuessSet(n));
    users.push_back(u);
  }
  return SystemSpec(std::move(product), std::move(users), adversary_side_info);
}

absl::StatusOr<SystemSpec> RandomSystem(const ExperimentConfig& config,
                                        TrialRng& rng,
                                        const std::vector<Digraph>* catalog,
                                        SystemDraw* draw) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  const int n = config.num_sources;
  SystemDraw local;

  if (config.digraph_mode == DigraphMode::kCatalog) {
    if (catalog == nullptr || catalog->empty() ||
        catalog->front().num_vertices() != n) {
      return absl::InvalidArgumentError(
          "catalog mode needs a catalog for the configured n");
    }
    local.digraph_code = (*catalog)[rng.UniformInt(catalog->size())].code();
  } else {
    const int bits = n * (n - 1);
    local.digraph_code =
        bits == 0 ? 0 : static_cast<uint32_t>(rng.UniformInt(uint64_t{1} << bits));
  }

  std::vector<SourceDistribution> sources;
  for (int i = 0; i < n; ++i) {
    if (config.alphabet_size == 2) {
      const double p = rng.UniformOpen(config.p_low, config.p_high);
      local.source_params.push_back(p);
      absl::StatusOr<SourceDistribution> d = SourceDistribution::Bernoulli(p);
      if (!d.ok()) return d.status();
      sources.push_back(*std::move(d));
    } else {
      std::vector<double> weights;
      double total = 0.0;
      for (int a = 0; a < config.alphabet_size; ++a) {
        weights.push_back(rng.UniformOpen(config.p_low, config.p_high));
        total += weights.back();
      }
      for (double& w : weights) {
        w /= total;
        local.source_params.push_back(w);
      }
      absl::StatusOr<SourceDistribution> d =
          SourceDistribution::Create(std::move(weights));
      if (!d.ok()) return d.status();
      sources.push_back(*std::move(d));
    }
  }
  for (int i = 0; i < config.num_users; ++i) {
    local.d_fractions.push_back(
        rng.UniformOpen(config.d_fraction_low, config.d_fraction_high));
  }

  std::vector<SourceSet> candidates;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    const SourceSet s = SourceSet::FromMask(mask);
    if (s.size() <= config.max_adversary_side_info) candidates.push_back(s);
  }
  local.adversary_side_info = candidates[rng.UniformInt(candidates.size())];

  SystemSpec spec = SystemFromDigraph(Digraph(n, local.digraph_code),
                                      std::move(sources), local.d_fractions,
                                      local.adversary_side_info,
                                      config.num_users);
  if (std::vector<Violation> v = Validate(spec); !v.empty()) {
    return absl::InternalError(absl::StrCat(
        "generated system fails validation: ", v.front().message));
  }
  if (draw != nullptr) *draw = std::move(local);
  return spec;
}

absl::StatusOr<TrialRecord> EvaluateSystem(const SystemSpec& spec, int trial) {
  absl::StatusOr<AgglomerativeDesigner> designer =
      AgglomerativeDesigner::Create(spec);
  if (!designer.ok()) return designer.status();
  absl::StatusOr<GreedyResult> greedy = designer->Run();
  if (!greedy.ok()) return greedy.status();
  absl::StatusOr<double> alg1 =
      MaxLeakage(spec, greedy->mechanism.ToMechanism());
  if (!alg1.ok()) return alg1.status();
  absl::StatusOr<Theorem2Result> thm2 = Theorem2Bound(spec);
  if (!thm2.ok()) return thm2.status();

  TrialRecord r;
  r.trial = trial;
  r.theorem1_bits = Theorem1Bound(spec, designer->graph());
  r.theorem2_bits = thm2->bound;
  r.alg1_bits = *alg1;
  r.merges = static_cast<int>(greedy->trace.size());
  r.system = SystemToJson(spec);

  const double bound = std::max(r.theorem1_bits, r.theorem2_bits);
  if (r.alg1_bits < bound - kSoundnessTolerance) {
    return absl::AbortedError(absl::StrFormat(
        "soundness violation in trial %d: alg1 %.12g bits < max(theorem1 "
        "%.12g, theorem2 %.12g) bits; system %s",
        trial, r.alg1_bits, r.theorem1_bits, r.theorem2_bits,
        r.system.dump()));
  }
  constexpr double kZero = 1e-12;
  if (bound <= kZero) {
    r.ratio = r.alg1_bits <= kZero ? 1.0
                                   : std::numeric_limits<double>::infinity();
  } else {
    r.ratio = r.alg1_bits / bound;
  }
  return r;
}

void Aggregate(ExperimentReport& report) {
  report.cumulative = {};
  report.disjoint = {};
  report.dominance = {};
  for (const TrialRecord& t : report.trials) {
    const double r = t.ratio;
    const bool one = std::abs(r - 1.0) <= kRatioOneTolerance;
    BucketCounts& c = report.cumulative;
    if (one) ++c.equal_one;
    if (one || r < 1.05) ++c.below_1_05;
    if (one || r < 1.1) ++c.below_1_1;
    if (one || r < 1.2) ++c.below_1_2;
    if (!one && !(r < 1.2)) ++c.at_least_1_2;

    BucketCounts& d = report.disjoint;
    if (one) {
      ++d.equal_one;
    } else if (r < 1.05) {
      ++d.below_1_05;
    } else if (r < 1.1) {
      ++d.below_1_1;
    } else if (r < 1.2) {
      ++d.below_1_2;
    } else {
      ++d.at_least_1_2;
    }

    const double diff = t.theorem1_bits - t.theorem2_bits;
    if (std::abs(diff) <= kRatioOneTolerance) {
      ++report.dominance.equal;
    } else if (diff > 0) {
      ++report.dominance.theorem1_greater;
    } else {
      ++report.dominance.theorem2_greater;
    }
  }
}

absl::StatusOr<ExperimentReport> RunBatch(const ExperimentConfig& config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  std::vector<Digraph> catalog;
  if (config.digraph_mode == DigraphMode::kCatalog) {
    absl::StatusOr<std::vector<Digraph>> c =
        GenerateDigraphCatalog(config.num_sources);
    if (!c.ok()) return c.status();
    catalog = *std::move(c);
  }

  std::vector<std::optional<absl::StatusOr<TrialRecord>>> results(
      config.trials);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      if (failed) return;
      TrialRng rng(config.seed, static_cast<uint64_t>(t));
      SystemDraw draw;
      absl::StatusOr<SystemSpec> spec =
          RandomSystem(config, rng, &catalog, &draw);
      if (!spec.ok()) {
        results[t] = spec.status();
        failed = true;
        continue;
      }
      absl::StatusOr<TrialRecord> record = EvaluateSystem(*spec, t);
      if (record.ok()) {
        record->draw = std::move(draw);
      } else {
        failed = true;
      }
      results[t] = std::move(record);
    }
  };
  int threads = config.threads;
  if (threads == 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, config.trials);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  ExperimentReport report;
  report.config = config;
  // Report the earliest failing trial so the outcome does not depend on
  // scheduling.
  for (auto& r : results) {
    if (r.has_value() && !r->ok()) return r->status();
  }
  for (auto& r : results) report.trials.push_back(**std::move(r));
  Aggregate(report);
  return report;
}

json ReportToJson(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  json out;
  out["software"] = {{"name", "leakage-lab"}, {"version", SoftwareVersion()}};
  out["units"] = "bits";
  out["config"] = {
      {"trials", c.trials},
      {"n", c.num_sources},
      {"m", c.num_users},
      {"alphabet_size", c.alphabet_size},
      {"seed", c.seed},
      {"p_range", {c.p_low, c.p_high}},
      {"d_fraction_range", {c.d_fraction_low, c.d_fraction_high}},
      {"max_adversary_side_info", c.max_adversary_side_info},
      {"digraphs", DigraphModeName(c.digraph_mode)},
      {"P_sampling", "uniform over all subsets with |P| <= cap"},
      {"rng", "mt19937_64 seeded per trial from (seed, trial index)"}};

  json trials = json::array();
  for (const TrialRecord& t : report.trials) {
    trials.push_back({{"trial", t.trial},
                      {"theorem1_bits", t.theorem1_bits},
                      {"theorem2_bits", t.theorem2_bits},
                      {"alg1_bits", t.alg1_bits},
                      {"R", NumberOrNull(t.ratio)},
                      {"merges", t.merges},
                      {"digraph_code", t.draw.digraph_code},
                      {"source_params", t.draw.source_params},
                      {"d_fractions", t.draw.d_fractions},
                      {"P", SetToJson(t.draw.adversary_side_info)},
                      {"system", t.system}});
  }
  out["trials"] = std::move(trials);
  out["buckets"] = {{"cumulative", BucketsToJson(report.cumulative)},
                    {"disjoint", BucketsToJson(report.disjoint)}};
  out["dominance"] = {
      {"theorem1_greater", report.dominance.theorem1_greater},
      {"theorem2_greater", report.dominance.theorem2_greater},
      {"equal", report.dominance.equal}};

  // Published counts for the default configuration, for side-by-side reading.
  const double total = static_cast<double>(report.trials.size());
  auto frac = [&](int k) { return total > 0 ? k / total : 0.0; };
  const int thm1_at_least =
      report.dominance.theorem1_greater + report.dominance.equal;
  out["reference"] = {
      {"trials", 500},
      {"cumulative", {{"=1", 162}, {"<1.05", 401}, {"<1.1", 429},
                      {"<1.2", 460}, {">=1.2", 40}}},
      {"theorem1_at_least_theorem2", 498},
      {"comparison",
       {{"equal_one_fraction", frac(report.cumulative.equal_one)},
        {"equal_one_fraction_reference", 162.0 / 500},
        {"below_1_2_fraction", frac(report.cumulative.below_1_2)},
        {"below_1_2_fraction_reference", 460.0 / 500},
        {"theorem1_at_least_theorem2_fraction", frac(thm1_at_least)},
        {"theorem1_at_least_theorem2_fraction_reference", 498.0 / 500}}}};
  return out;
}

std::string ReportToCsv(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  std::string out = absl::StrFormat(
      "# leakage-lab %s seed=%d trials=%d n=%d m=%d alphabet=%d max_p=%d "
      "digraphs=%s\n",
      SoftwareVersion(), c.seed, c.trials, c.num_sources, c.num_users,
      c.alphabet_size, c.max_adversary_side_info,
      DigraphModeName(c.digraph_mode));
  out += "view,=1,<1.05,<1.1,<1.2,>=1.2\n";
  if (report.trials.empty()) return out;
  auto row = [](const char* view, const BucketCounts& b) {
    return absl::StrCat(view, ",", b.equal_one, ",", b.below_1_05, ",",
                        b.below_1_1, ",", b.below_1_2, ",", b.at_least_1_2,
                        "\n");
  };
  out += row("cumulative", report.cumulative);
  out += row("disjoint", report.disjoint);
  return out;
}

std::string SoftwareVersion() { return LEAKAGE_LAB_VERSION; }

}  // namespace leakage_lab
