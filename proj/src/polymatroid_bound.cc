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

#include "leakage_lab/polymatroid_bound.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace leakage_lab {
namespace {

std::string SubsetName(uint32_t mask) {
  return SourceSet::FromMask(mask).ToString();
}

class ProgramBuilder {
 public:
  explicit ProgramBuilder(PolymatroidProgram& program) : program_(program) {}

  void Add(std::vector<std::pair<int, double>> terms, RowSense sense,
           double rhs, std::string label) {
    program_.lp.constraints.push_back({std::move(terms), sense, rhs});
    program_.row_labels.push_back(std::move(label));
  }

 private:
  PolymatroidProgram& program_;
};

void AddElementalRows(int n, ProgramBuilder& rows, PolymatroidProgram& p) {
  const uint32_t full = SourceSet::Full(n).mask();
  for (uint32_t s = 0; s <= full; ++s) {
    for (int i = 0; i < n; ++i) {
      const uint32_t bi = uint32_t{1} << i;
      if (s & bi) continue;
      rows.Add({{static_cast<int>(s | bi), 1.0}, {static_cast<int>(s), -1.0}},
               RowSense::kGreaterEqual, 0.0,
               absl::StrCat("mono ", SubsetName(s), "+", i + 1));
      ++p.num_monotonicity_rows;
    }
  }
  for (uint32_t s = 0; s <= full; ++s) {
    for (int i = 0; i < n; ++i) {
      const uint32_t bi = uint32_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const uint32_t bj = uint32_t{1} << j;
        if (s & bj) continue;
        rows.Add({{static_cast<int>(s | bi), 1.0},
                  {static_cast<int>(s | bj), 1.0},
                  {static_cast<int>(s | bi | bj), -1.0},
                  {static_cast<int>(s), -1.0}},
                 RowSense::kGreaterEqual, 0.0,
                 absl::StrCat("submod ", SubsetName(s), "+", i + 1, ",", j + 1));
        ++p.num_submodularity_rows;
      }
    }
  }
}

void AddAllPairsRows(int n, ProgramBuilder& rows, PolymatroidProgram& p) {
  const uint32_t full = SourceSet::Full(n).mask();
  for (uint32_t s = 0; s <= full; ++s) {
    for (uint32_t t = 0; t <= full; ++t) {
      if (s == t || (s & ~t) != 0) continue;
      rows.Add({{static_cast<int>(t), 1.0}, {static_cast<int>(s), -1.0}},
               RowSense::kGreaterEqual, 0.0,
               absl::StrCat("mono ", SubsetName(s), "<", SubsetName(t)));
      ++p.num_monotonicity_rows;
    }
  }
  for (uint32_t s = 0; s <= full; ++s) {
    for (uint32_t t = s + 1; t <= full; ++t) {
      if ((s & ~t) == 0 || (t & ~s) == 0) continue;
      rows.Add({{static_cast<int>(s), 1.0},
                {static_cast<int>(t), 1.0},
                {static_cast<int>(s | t), -1.0},
                {static_cast<int>(s & t), -1.0}},
               RowSense::kGreaterEqual, 0.0,
               absl::StrCat("submod ", SubsetName(s), ",", SubsetName(t)));
      ++p.num_submodularity_rows;
    }
  }
}

}  // namespace

absl::StatusOr<PolymatroidProgram> BuildPolymatroidProgram(
    const SystemSpec& spec, SourceSet target, SourceSet conditioning,
    PolymatroidForm form) {
  const int n = spec.num_sources();
  if (n > kMaxSources) {
    return absl::InvalidArgumentError("too many sources for the program");
  }
  if (target.Intersects(conditioning)) {
    return absl::InvalidArgumentError(
        absl::StrCat("V = ", target.ToString(), " and Z = ",
                     conditioning.ToString(), " are not disjoint"));
  }
  const SourceSet all = SourceSet::Full(n);
  if (!target.IsSubsetOf(all) || !conditioning.IsSubsetOf(all)) {
    return absl::InvalidArgumentError("V or Z references an unknown source");
  }
  PolymatroidProgram p;
  p.ground_set_size = n;
  p.target = target;
  p.conditioning = conditioning;
  p.lp.num_variables = 1 << n;
  p.lp.objective.assign(p.lp.num_variables, 0.0);
  const SourceSet upper = conditioning.Complement(n);
  const SourceSet lower = upper - target;
  p.lp.objective[upper.mask()] += 1.0;
  p.lp.objective[lower.mask()] -= 1.0;

  ProgramBuilder rows(p);
  rows.Add({{0, 1.0}}, RowSense::kEqual, 0.0, "g({}) = 0");
  if (form == PolymatroidForm::kElemental) {
    AddElementalRows(n, rows, p);
  } else {
    AddAllPairsRows(n, rows, p);
  }

  // Distinct users can produce the same (G, W) row; emit each once.
  std::set<std::pair<uint32_t, uint32_t>> emitted;
  for (const UserSpec& u : spec.users()) {
    const uint32_t wi = u.must_decode.mask();
    for (uint32_t w = wi; w != 0; w = (w - 1) & wi) {
      const SourceSet decode = SourceSet::FromMask(w);
      const uint32_t free = ((decode | u.side_info).Complement(n)).mask();
      const double h = spec.sources().Entropy(decode);
      // Every subset G of `free`, including the empty set.
      for (uint32_t g = free;; g = (g - 1) & free) {
        if (emitted.emplace(g, w).second) {
          rows.Add({{static_cast<int>(g | w), 1.0}, {static_cast<int>(g), -1.0}},
                   RowSense::kEqual, h,
                   absl::StrCat("decode g(", SubsetName(g | w), ") - g(",
                                SubsetName(g), ") = H(X", SubsetName(w), ")"));
          ++p.num_decoding_rows;
        }
        if (g == 0) break;
      }
    }
  }
  return p;
}

LpSolution SolvePolymatroidProgram(const PolymatroidProgram& program) {
  return SolveLinearProgram(program.lp);
}

absl::StatusOr<double> Lambda(const SystemSpec& spec, SourceSet target,
                              SourceSet conditioning, PolymatroidForm form) {
  absl::StatusOr<PolymatroidProgram> program =
      BuildPolymatroidProgram(spec, target, conditioning, form);
  if (!program.ok()) return program.status();
  if (target.empty()) return 0.0;
  const LpSolution solution = SolvePolymatroidProgram(*program);
  if (solution.status != LpStatus::kOptimal) {
    return absl::InternalError(
        absl::StrCat("polymatroid program for V = ", target.ToString(),
                     ", Z = ", conditioning.ToString(), " is ",
                     LpStatusName(solution.status)));
  }
  return solution.objective_value;
}

absl::StatusOr<Theorem2Result> Theorem2Bound(const SystemSpec& spec) {
  const SourceSet q = spec.adversary_unknown();
  const SourceSet p = spec.adversary_side_info();
  Theorem2Result result;
  absl::StatusOr<double> lambda_qp = Lambda(spec, q, p);
  if (!lambda_qp.ok()) return lambda_qp.status();
  result.lambda_qp = *lambda_qp;
  result.bound = *lambda_qp;
  for (int i = 0; i < spec.num_users(); ++i) {
    if (!spec.guess_set(i).IsSubsetOf(q)) continue;
    const UserSpec& u = spec.user(i);
    absl::StatusOr<double> lambda = Lambda(spec, u.side_info & q, p);
    if (!lambda.ok()) return lambda.status();
    Theorem2UserTerm term;
    term.user = i;
    term.threshold = u.gain_threshold;
    term.decode_entropy = spec.sources().Entropy(u.must_decode & q);
    term.lambda = *lambda;
    term.total = term.threshold + term.decode_entropy + term.lambda;
    result.bound = std::max(result.bound, term.total);
    result.per_user.push_back(term);
  }
  return result;
}

std::string DumpProgram(const PolymatroidProgram& program) {
  std::string out = absl::StrCat(
      "# polymatroid program: n = ", program.ground_set_size,
      ", V = ", program.target.ToString(),
      ", Z = ", program.conditioning.ToString(), "\n",
      "# variables: g(S) for every subset S, column index = bitmask of S\n",
      "minimize");
  for (int j = 0; j < program.lp.num_variables; ++j) {
    if (program.lp.objective[j] != 0.0) {
      absl::StrAppend(&out, " ", program.lp.objective[j], "*g", j);
    }
  }
  out += "\n";
  for (size_t r = 0; r < program.lp.constraints.size(); ++r) {
    const LinearConstraint& c = program.lp.constraints[r];
    absl::StrAppend(&out, "row ", r, ":");
    for (auto [var, coeff] : c.terms) absl::StrAppend(&out, " ", coeff, "*g", var);
    const char* sense = c.sense == RowSense::kEqual          ? "="
                        : c.sense == RowSense::kGreaterEqual ? ">="
                                                             : "<=";
    absl::StrAppend(&out, " ", sense, " ", absl::StrFormat("%.17g", c.rhs), "  # ", program.row_labels[r],
                    "\n");
  }
  return out;
}

}  // namespace leakage_lab
