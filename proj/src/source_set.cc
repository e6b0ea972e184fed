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

#include "leakage_lab/source_set.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace leakage_lab {

SourceSet SourceSet::Of(std::initializer_list<int> members) {
  SourceSet s;
  for (int i : members) s = s.With(i);
  return s;
}

SourceSet SourceSet::Of(const std::vector<int>& members) {
  SourceSet s;
  for (int i : members) s = s.With(i);
  return s;
}

std::vector<int> SourceSet::Members() const {
  std::vector<int> out;
  out.reserve(size());
  for (uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string SourceSet::ToString() const {
  std::vector<int> one_based = Members();
  for (int& i : one_based) ++i;
  return absl::StrCat("{", absl::StrJoin(one_based, ","), "}");
}

}  // namespace leakage_lab
