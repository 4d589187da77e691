// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCG_SUBSET_HPP
#define MCG_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg {

// Set of resources, one bit per resource index.
using Subset = std::uint64_t;
// Set of players, one bit per (zero-based) player index.
using PlayerSet = std::uint32_t;

inline constexpr int kMaxResources = 64;
inline constexpr int kMaxPlayers = 20;
inline constexpr int kDefaultEnumerationCap = 20;

inline constexpr Subset bit(int element) { return Subset{1} << element; }

inline constexpr bool contains(Subset set, int element) { return (set >> element) & 1U; }

inline constexpr int cardinality(Subset set) { return std::popcount(set); }

inline constexpr bool is_subset_of(Subset inner, Subset outer) { return (inner & ~outer) == 0; }

inline constexpr Subset full_set(int size) {
  return size >= kMaxResources ? ~Subset{0} : (Subset{1} << size) - 1;
}

inline std::vector<int> elements_of(Subset set) {
  std::vector<int> out;
  out.reserve(cardinality(set));
  while (set != 0) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

inline Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= bit(e);
  return s;
}

// Canonical order on sets: by cardinality, then lexicographically on the
// increasing element sequences.
inline bool canonical_less(Subset a, Subset b) {
  if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
  Subset diff = a ^ b;
  if (diff == 0) return false;
  return contains(a, std::countr_zero(diff));
}

// Calls fn(subset) for every k-subset of `ground`, in canonical order.
template <class Fn>
void for_each_k_subset(Subset ground, int k, Fn&& fn) {
  std::vector<int> elems = elements_of(ground);
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    Subset s = 0;
    for (int j : idx) s |= bit(elems[j]);
    fn(s);
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j) --j;
    if (j < 0) return;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

inline std::string format_subset(Subset set, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(set)) {
    if (!first) out += ",";
    first = false;
    out += e < static_cast<int>(names.size()) ? names[e] : std::to_string(e);
  }
  return out + "}";
}

}  // namespace mcg

#endif  // MCG_SUBSET_HPP
