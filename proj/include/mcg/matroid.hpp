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

#ifndef MCG_MATROID_HPP
#define MCG_MATROID_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "mcg/errors.hpp"
#include "mcg/numeric.hpp"
#include "mcg/subset.hpp"

namespace mcg {

struct UniformKind {
  int rank = 0;
  bool operator==(const UniformKind&) const = default;
};

struct PartitionKind {
  struct Block {
    Subset elements = 0;
    int capacity = 0;
    bool operator==(const Block&) const = default;
  };
  std::vector<Block> blocks;
  bool operator==(const PartitionKind&) const = default;
};

struct GraphicKind {
  struct Edge {
    int element = 0;
    int tail = 0;
    int head = 0;
    bool operator==(const Edge&) const = default;
  };
  std::vector<Edge> edges;
  bool operator==(const GraphicKind&) const = default;
};

struct ExplicitBasesKind {
  std::vector<Subset> bases;
  bool operator==(const ExplicitBasesKind&) const = default;
};

// Why a set family fails to be the base family of a matroid.
struct AxiomViolation {
  enum class Kind { kEmptyFamily, kUnequalCardinality, kExchange };
  Kind kind = Kind::kEmptyFamily;
  Subset first = 0;
  Subset second = 0;
  int element = -1;  // the e of a failing (S, S', e) triple

  std::string describe(const std::vector<std::string>& names = {}) const {
    switch (kind) {
      case Kind::kEmptyFamily:
        return "empty base family";
      case Kind::kUnequalCardinality:
        return "bases of different cardinality: " + format_subset(first, names) + " and " +
               format_subset(second, names);
      case Kind::kExchange:
        break;
    }
    std::string e = element < static_cast<int>(names.size()) ? names[element]
                                                              : std::to_string(element);
    return "exchange axiom fails for S=" + format_subset(first, names) +
           ", S'=" + format_subset(second, names) + ", e=" + e;
  }
};

struct AxiomVerdict {
  std::optional<AxiomViolation> violation;
  bool is_matroid() const { return !violation.has_value(); }
};

// Checks nonemptiness, equal cardinality and the exchange axiom on an
// explicit family. Duplicate sets are ignored.
inline AxiomVerdict verify_base_axioms(std::vector<Subset> family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty()) return {AxiomViolation{AxiomViolation::Kind::kEmptyFamily}};
  for (Subset s : family) {
    if (cardinality(s) != cardinality(family.front())) {
      return {AxiomViolation{AxiomViolation::Kind::kUnequalCardinality, family.front(), s}};
    }
  }
  std::unordered_set<Subset> members(family.begin(), family.end());
  for (Subset s : family) {
    for (Subset t : family) {
      for (int e : elements_of(s & ~t)) {
        bool found = false;
        for (int f : elements_of(t & ~s)) {
          if (members.count((s & ~bit(e)) | bit(f))) {
            found = true;
            break;
          }
        }
        if (!found) return {AxiomViolation{AxiomViolation::Kind::kExchange, s, t, e}};
      }
    }
  }
  return {};
}

// Base-membership oracle for a matroid over a subset of the resources.
// Immutable after construction.
class MatroidOracle {
 public:
  using Kind = std::variant<UniformKind, PartitionKind, GraphicKind, ExplicitBasesKind>;

  static MatroidOracle uniform(Subset ground, int rank) {
    if (rank < 0 || rank > cardinality(ground)) {
      throw ValidationError("uniform matroid rank " + std::to_string(rank) +
                            " outside [0, " + std::to_string(cardinality(ground)) + "]");
    }
    return MatroidOracle(ground, UniformKind{rank}, rank);
  }

  static MatroidOracle partition(std::vector<PartitionKind::Block> blocks) {
    Subset ground = 0;
    int rank = 0;
    for (const auto& b : blocks) {
      if ((ground & b.elements) != 0) throw ValidationError("partition blocks overlap");
      if (b.capacity < 0 || b.capacity > cardinality(b.elements)) {
        throw ValidationError("partition block capacity " + std::to_string(b.capacity) +
                              " exceeds block size " + std::to_string(cardinality(b.elements)));
      }
      ground |= b.elements;
      rank += b.capacity;
    }
    return MatroidOracle(ground, PartitionKind{std::move(blocks)}, rank);
  }

  // Spanning trees of a connected multigraph whose edges are resources.
  static MatroidOracle graphic(std::vector<GraphicKind::Edge> edges) {
    Subset ground = 0;
    std::map<int, int> vertex_index;
    for (const auto& e : edges) {
      if (contains(ground, e.element)) throw ValidationError("graphic matroid repeats an edge");
      ground |= bit(e.element);
      vertex_index.emplace(e.tail, 0);
      vertex_index.emplace(e.head, 0);
    }
    if (edges.empty()) throw ValidationError("graphic matroid needs at least one edge");
    int next = 0;
    for (auto& [label, index] : vertex_index) index = next++;
    MatroidOracle m(ground, GraphicKind{std::move(edges)}, next - 1);
    m.vertex_index_ = std::move(vertex_index);
    m.vertices_ = next;
    if (!m.graph_spans(ground)) throw ValidationError("graphic matroid graph is disconnected");
    return m;
  }

  // Throws ValidationError naming the violating triple unless the family is
  // the base family of a matroid.
  static MatroidOracle explicit_bases(std::vector<Subset> bases) {
    AxiomVerdict verdict = verify_base_axioms(bases);
    if (!verdict.is_matroid()) {
      throw ValidationError("not a matroid: " + verdict.violation->describe());
    }
    std::sort(bases.begin(), bases.end(), canonical_less);
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    Subset ground = 0;
    for (Subset b : bases) ground |= b;
    int rank = cardinality(bases.front());
    return MatroidOracle(ground, ExplicitBasesKind{std::move(bases)}, rank);
  }

  Subset ground() const { return ground_; }
  int rank() const { return rank_; }
  const Kind& kind() const { return kind_; }

  bool is_independent(Subset set) const {
    check_in_ground(set);
    return std::visit([&](const auto& k) { return independent(k, set); }, kind_);
  }

  bool is_base(Subset set) const {
    check_in_ground(set);
    if (cardinality(set) != rank_) return false;
    if (const auto* explicit_kind = std::get_if<ExplicitBasesKind>(&kind_)) {
      return std::binary_search(explicit_kind->bases.begin(), explicit_kind->bases.end(), set,
                                canonical_less);
    }
    return is_independent(set);
  }

  bool operator==(const MatroidOracle& other) const {
    return ground_ == other.ground_ && kind_ == other.kind_;
  }

 private:
  MatroidOracle(Subset ground, Kind kind, int rank)
      : ground_(ground), kind_(std::move(kind)), rank_(rank) {}

  void check_in_ground(Subset set) const {
    if (!is_subset_of(set, ground_)) {
      throw DomainError("set contains element " +
                        std::to_string(elements_of(set & ~ground_).front()) +
                        " outside the ground set");
    }
  }

  bool independent(const UniformKind& k, Subset set) const { return cardinality(set) <= k.rank; }

  bool independent(const PartitionKind& k, Subset set) const {
    for (const auto& b : k.blocks) {
      if (cardinality(set & b.elements) > b.capacity) return false;
    }
    return true;
  }

  bool independent(const GraphicKind& k, Subset set) const {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : k.edges) {
      if (!contains(set, e.element)) continue;
      int a = find(vertex_index_.at(e.tail));
      int b = find(vertex_index_.at(e.head));
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

  bool independent(const ExplicitBasesKind& k, Subset set) const {
    return std::any_of(k.bases.begin(), k.bases.end(),
                       [&](Subset b) { return is_subset_of(set, b); });
  }

  bool graph_spans(Subset edges) const {
    const auto& g = std::get<GraphicKind>(kind_);
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int components = vertices_;
    for (const auto& e : g.edges) {
      if (!contains(edges, e.element)) continue;
      int a = find(vertex_index_.at(e.tail));
      int b = find(vertex_index_.at(e.head));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components == 1;
  }

  Subset ground_;
  Kind kind_;
  int rank_;
  std::map<int, int> vertex_index_;
  int vertices_ = 0;
};

// All bases in canonical order.
inline std::vector<Subset> enumerate_bases(const MatroidOracle& m,
                                           int cap = kDefaultEnumerationCap) {
  if (cardinality(m.ground()) > cap) {
    throw ResourceLimitError("ground set of size " + std::to_string(cardinality(m.ground())) +
                             " exceeds the enumeration cap " + std::to_string(cap));
  }
  if (const auto* k = std::get_if<ExplicitBasesKind>(&m.kind())) return k->bases;
  std::vector<Subset> bases;
  for_each_k_subset(m.ground(), m.rank(), [&](Subset s) {
    if (m.is_base(s)) bases.push_back(s);
  });
  return bases;
}

// Every f in S2 \ S such that (S - e) + f is a base, in canonical order.
inline std::vector<int> exchange_candidates(const MatroidOracle& m, Subset s, Subset s2, int e) {
  if (!m.is_base(s) || !m.is_base(s2)) throw ContractError("exchange needs two bases");
  if (!contains(s, e) || contains(s2, e)) throw ContractError("exchange element not in S \\ S'");
  std::vector<int> out;
  for (int f : elements_of(s2 & ~s)) {
    if (m.is_base((s & ~bit(e)) | bit(f))) out.push_back(f);
  }
  return out;
}

// The canonically smallest f in S2 \ S for which both (S - e) + f and
// (S2 - f) + e are bases.
inline int simultaneous_exchange(const MatroidOracle& m, Subset s, Subset s2, int e) {
  for (int f : exchange_candidates(m, s, s2, e)) {
    if (m.is_base((s2 & ~bit(f)) | bit(e))) return f;
  }
  throw std::logic_error("simultaneous exchange failed: matroid oracle is inconsistent");
}

// Greedy: scan elements by nondecreasing weight (ties by index) and keep
// each one that preserves independence. `weight` maps element -> CostValue.
template <class WeightFn>
Subset min_weight_base(const MatroidOracle& m, WeightFn&& weight) {
  std::vector<int> order = elements_of(m.ground());
  std::vector<CostValue> w;
  w.reserve(order.size());
  for (int e : order) w.push_back(weight(e));
  std::vector<std::size_t> perm(order.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return less_than(w[a], w[b]); });
  Subset base = 0;
  for (std::size_t k : perm) {
    if (cardinality(base) == m.rank()) break;
    Subset grown = base | bit(order[k]);
    if (m.is_independent(grown)) base = grown;
  }
  return base;
}

// True iff the greedy min-sum base also attains the minimum over all bases
// of the maximum element weight.
template <class WeightFn>
bool min_sum_base_minimizes_max(const MatroidOracle& m, WeightFn&& weight,
                                int cap = kDefaultEnumerationCap) {
  auto max_weight = [&](Subset s) {
    std::optional<CostValue> best;
    for (int e : elements_of(s)) {
      CostValue w = weight(e);
      if (!best || less_than(*best, w)) best = w;
    }
    return best.value_or(CostValue(0));
  };
  CostValue greedy_max = max_weight(min_weight_base(m, weight));
  for (Subset b : enumerate_bases(m, cap)) {
    if (less_than(max_weight(b), greedy_max)) return false;
  }
  return true;
}

}  // namespace mcg

#endif  // MCG_MATROID_HPP
