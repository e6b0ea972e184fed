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

#ifndef LEAKAGE_LAB_SOURCE_SET_H_
#define LEAKAGE_LAB_SOURCE_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace leakage_lab {

// Upper limit on the number of sources. Subsets are stored as bitmasks and
// the polymatroid program has one variable per subset.
inline constexpr int kMaxSources = 20;

// A subset of the source indices {0, ..., n-1}. Bit i set means source i is a
// member. Indices are 0-based; files and user-facing messages use 1-based.
class SourceSet {
 public:
  constexpr SourceSet() = default;

  static constexpr SourceSet FromMask(uint32_t mask) { return SourceSet(mask); }
  static SourceSet Of(std::initializer_list<int> members);
  static SourceSet Of(const std::vector<int>& members);
  static constexpr SourceSet Full(int n) {
    return SourceSet(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }

  constexpr uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool Contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr bool IsSubsetOf(SourceSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool Intersects(SourceSet other) const {
    return (mask_ & other.mask_) != 0;
  }
  constexpr SourceSet With(int i) const {
    return SourceSet(mask_ | (uint32_t{1} << i));
  }
  constexpr SourceSet Without(int i) const {
    return SourceSet(mask_ & ~(uint32_t{1} << i));
  }
  constexpr SourceSet Complement(int n) const {
    return SourceSet(~mask_ & Full(n).mask_);
  }

  // Members in increasing order.
  std::vector<int> Members() const;

  // "{1,3}" with 1-based indices.
  std::string ToString() const;

  friend constexpr SourceSet operator|(SourceSet a, SourceSet b) {
    return SourceSet(a.mask_ | b.mask_);
  }
  friend constexpr SourceSet operator&(SourceSet a, SourceSet b) {
    return SourceSet(a.mask_ & b.mask_);
  }
  // Set difference.
  friend constexpr SourceSet operator-(SourceSet a, SourceSet b) {
    return SourceSet(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(SourceSet a, SourceSet b) = default;

 private:
  explicit constexpr SourceSet(uint32_t mask) : mask_(mask) {}

  uint32_t mask_ = 0;
};

}  // namespace leakage_lab

#endif  // LEAKAGE_LAB_SOURCE_SET_H_
