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

#ifndef MCG_GENERATE_HPP
#define MCG_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcg/costs.hpp"
#include "mcg/errors.hpp"
#include "mcg/game.hpp"
#include "mcg/matroid.hpp"

namespace mcg {

// Deterministic across standard libraries: draws use the raw engine output
// rather than the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() & 1) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[below(k)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class MatroidFamily { kUniform, kPartition, kGraphic, kExplicitBases, kAny };
enum class SetCostFamily { kCount, kWeight, kSet, kAny };
enum class AggregatorChoice { kSum, kMax, kLp, kTable, kAny };

struct GenerateParams {
  Flavor flavor = Flavor::kComplementarities;
  int players = 3;
  int resources = 5;
  // Common strategy cardinality; 0 draws it from [1, 2].
  int rank = 0;
  MatroidFamily matroids = MatroidFamily::kAny;
  SetCostFamily costs = SetCostFamily::kAny;
  AggregatorChoice aggregator = AggregatorChoice::kAny;
  // Exponent used for AggregatorChoice::kLp.
  int p = 2;
  // Cost values are drawn from the integer grid {0, .., max_value}.
  int max_value = 5;
  // For mixed-set-functional games: tie bottlenecks to latencies via a shared d.
  bool monotone_dependence = false;
  std::uint64_t seed = 0;
};

namespace detail {

inline Subset random_subset(Rng& rng, int m, int size) {
  std::vector<int> order(m);
  for (int e = 0; e < m; ++e) order[e] = e;
  rng.shuffle(order);
  Subset s = 0;
  for (int k = 0; k < size; ++k) s |= bit(order[k]);
  return s;
}

inline MatroidOracle random_matroid(Rng& rng, MatroidFamily family, int m, int rank) {
  if (family == MatroidFamily::kAny) {
    family = static_cast<MatroidFamily>(rng.below(4));
  }
  const int size = rng.range(rank, m);
  const Subset ground = random_subset(rng, m, size);
  std::vector<int> elements = elements_of(ground);
  rng.shuffle(elements);
  switch (family) {
    case MatroidFamily::kUniform:
      return MatroidOracle::uniform(ground, rank);
    case MatroidFamily::kPartition: {
      std::vector<PartitionKind::Block> blocks(rank);
      for (int k = 0; k < size; ++k) {
        int b = k < rank ? k : static_cast<int>(rng.below(rank));
        blocks[b].elements |= bit(elements[k]);
        blocks[b].capacity = 1;
      }
      return MatroidOracle::partition(std::move(blocks));
    }
    case MatroidFamily::kGraphic: {
      if (rank == 0) return MatroidOracle::uniform(ground, 0);
      std::vector<GraphicKind::Edge> edges;
      for (int k = 0; k < size; ++k) {
        int tail;
        int head;
        if (k < rank) {
          tail = k + 1;
          head = rng.range(0, k);
        } else {
          tail = rng.range(0, rank);
          head = rng.range(0, rank - 1);
          if (head >= tail) ++head;
        }
        edges.push_back({elements[k], tail, head});
      }
      std::sort(edges.begin(), edges.end(),
                [](const auto& a, const auto& b) { return a.element < b.element; });
      return MatroidOracle::graphic(std::move(edges));
    }
    case MatroidFamily::kExplicitBases:
    case MatroidFamily::kAny:
      break;
  }
  MatroidFamily inner = static_cast<MatroidFamily>(rng.below(3));
  auto source = random_matroid(rng, inner, m, rank);
  return MatroidOracle::explicit_bases(enumerate_bases(source, kMaxResources));
}

// Nondecreasing integer table of the given length with values in [0, top].
inline std::vector<Rational> random_nondecreasing(Rng& rng, std::size_t length, int top) {
  std::vector<Rational> values;
  int current = rng.range(0, 1);
  for (std::size_t k = 0; k < length; ++k) {
    if (k > 0) current = std::min(top, current + rng.range(0, 2));
    values.push_back(current);
  }
  return values;
}

// Monotone set function on player subsets, built bottom-up so that each
// value dominates every immediate subset.
inline std::vector<Rational> random_monotone_set_table(Rng& rng, int players, int top) {
  const std::size_t size = std::size_t{1} << players;
  std::vector<int> values(size, 0);
  values[0] = rng.range(0, 1);
  for (std::size_t mask = 1; mask < size; ++mask) {
    int floor_value = 0;
    for (int j = 0; j < players; ++j) {
      if (mask & (std::size_t{1} << j)) floor_value = std::max(floor_value, values[mask ^ (std::size_t{1} << j)]);
    }
    values[mask] = std::min(top, floor_value + rng.range(0, 2));
  }
  return {values.begin(), values.end()};
}

// Symmetric table g(v) = sum_j phi(v_j) + psi(max v) for nondecreasing phi
// and psi over {0, .., top}.
inline Aggregator random_monotone_table(Rng& rng, int arity, int top) {
  auto phi = random_nondecreasing(rng, top + 1, 2 * top);
  auto psi = random_nondecreasing(rng, top + 1, 2 * top);
  Aggregator::TableEntries entries;
  std::vector<int> v(arity, 0);
  while (true) {
    Rational value = psi[v.back()];
    for (int x : v) value += phi[x];
    entries.emplace(std::vector<Rational>(v.begin(), v.end()), value);
    int k = arity - 1;
    while (k >= 0 && v[k] == top) --k;
    if (k < 0) break;
    ++v[k];
    for (int j = k + 1; j < arity; ++j) v[j] = v[k];
  }
  return Aggregator::table(arity, std::move(entries), MonotonicityClass::kDeclaredWeaklyMonotone);
}

inline ScalarFunction random_weight_polynomial(Rng& rng) {
  return ScalarFunction::polynomial({Rational(rng.range(0, 1)), Rational(rng.range(0, 4), 2),
                                     Rational(rng.range(0, 1), 2)});
}

inline const std::vector<Rational>& alpha_choices() {
  static const std::vector<Rational> choices = {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                                Rational(2, 3), Rational(3, 4), Rational(1)};
  return choices;
}

}  // namespace detail

// Draws a random valid instance. Costs are monotone by construction and
// every player's strategies have the common cardinality params.rank.
inline GameInstance generate_game(const GenerateParams& params) {
  const int n = params.players;
  const int m = params.resources;
  if (n < 1 || n > kMaxPlayers) throw DomainError("player count must lie in [1, 20]");
  if (m < 1 || m > kMaxResources) throw DomainError("resource count must lie in [1, 64]");
  if (params.max_value < 1) throw DomainError("max_value must be positive");
  Rng rng(params.seed);
  const int rank = params.rank > 0 ? params.rank : rng.range(1, std::min(2, m));
  if (rank > m) {
    throw DomainError("infeasible: strategies of size " + std::to_string(rank) + " need at least that many resources");
  }
  const int top = params.max_value;

  GameInstance game;
  game.players = n;
  game.seed = params.seed;
  for (int e = 0; e < m; ++e) game.resources.push_back("r" + std::to_string(e + 1));
  for (int i = 0; i < n; ++i) game.spaces.push_back(detail::random_matroid(rng, params.matroids, m, rank));

  auto count_table = [&] { return ScalarFunction::table(detail::random_nondecreasing(rng, n + 1, top)); };
  switch (params.flavor) {
    case Flavor::kClassic: {
      ClassicCosts c;
      for (int e = 0; e < m; ++e) c.cost.push_back(count_table());
      game.costs = c;
      break;
    }
    case Flavor::kWeighted: {
      for (int i = 0; i < n; ++i) game.weights.push_back(Rational(rng.range(1, 6), 2));
      WeightedCosts c;
      for (int e = 0; e < m; ++e) c.cost.push_back(detail::random_weight_polynomial(rng));
      game.costs = c;
      break;
    }
    case Flavor::kPlayerSpecific: {
      PlayerSpecificCosts c;
      c.cost.resize(n);
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < m; ++e) c.cost[i].push_back(count_table());
      }
      game.costs = c;
      break;
    }
    case Flavor::kComplementarities: {
      AggregatorChoice choice = params.aggregator;
      if (choice == AggregatorChoice::kAny) choice = static_cast<AggregatorChoice>(rng.below(4));
      SetCostFamily family = params.costs;
      bool any_family = family == SetCostFamily::kAny;
      bool grid = choice == AggregatorChoice::kTable;
      bool weighted = family == SetCostFamily::kWeight || any_family;
      if (weighted) {
        for (int i = 0; i < n; ++i) {
          game.weights.push_back(grid ? Rational(rng.range(1, 2)) : Rational(rng.range(1, 6), 2));
        }
      }
      Rational total_weight = 0;
      for (const auto& w : game.weights) total_weight += w;
      ComplementarityCosts c{{}, Aggregator::sum()};
      for (int e = 0; e < m; ++e) {
        SetCostFamily f = any_family ? static_cast<SetCostFamily>(rng.below(3)) : family;
        if (f == SetCostFamily::kCount) {
          c.cost.push_back(SetCost::count_based(count_table()));
        } else if (f == SetCostFamily::kWeight) {
          if (grid) {
            std::size_t length = total_weight.convert_to<std::size_t>() + 1;
            c.cost.push_back(SetCost::weight_induced(
                ScalarFunction::table(detail::random_nondecreasing(rng, length, top))));
          } else {
            c.cost.push_back(SetCost::weight_induced(detail::random_weight_polynomial(rng)));
          }
        } else {
          c.cost.push_back(SetCost::table(detail::random_monotone_set_table(rng, n, top)));
        }
      }
      switch (choice) {
        case AggregatorChoice::kSum: c.aggregator = Aggregator::sum(rank); break;
        case AggregatorChoice::kMax: c.aggregator = Aggregator::max(rank); break;
        case AggregatorChoice::kLp: c.aggregator = Aggregator::lp(params.p, rank); break;
        default: c.aggregator = detail::random_monotone_table(rng, rank, top); break;
      }
      game.costs = c;
      break;
    }
    case Flavor::kMixed: {
      for (int i = 0; i < n; ++i) game.alphas.push_back(rng.pick(detail::alpha_choices()));
      MixedCosts c;
      for (int e = 0; e < m; ++e) c.latency.push_back(count_table());
      for (int e = 0; e < m; ++e) c.bottleneck.push_back(count_table());
      game.costs = c;
      break;
    }
    case Flavor::kPlayerSpecificMixed: {
      for (int i = 0; i < n; ++i) game.alphas.push_back(rng.pick(detail::alpha_choices()));
      PlayerSpecificMixedCosts c;
      c.latency.resize(n);
      c.bottleneck.resize(n);
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < m; ++e) c.latency[i].push_back(count_table());
      }
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < m; ++e) c.bottleneck[i].push_back(count_table());
      }
      game.costs = c;
      break;
    }
    case Flavor::kMixedSetFunctional: {
      for (int i = 0; i < n; ++i) game.alphas.push_back(rng.pick(detail::alpha_choices()));
      MixedSetCosts c;
      for (int e = 0; e < m; ++e) {
        c.latency.push_back(SetCost::table(detail::random_monotone_set_table(rng, n, top)));
      }
      if (params.monotone_dependence) {
        auto d = ScalarFunction::table(detail::random_nondecreasing(rng, top + 1, top));
        for (const auto& l : c.latency) {
          std::vector<Rational> values;
          for (const auto& x : std::get<SetCost::ExplicitTable>(l.form).values) {
            values.push_back(d(x));
          }
          c.bottleneck.push_back(SetCost::table(std::move(values)));
        }
        c.dependence = d;
      } else {
        for (int e = 0; e < m; ++e) {
          c.bottleneck.push_back(SetCost::table(detail::random_monotone_set_table(rng, n, top)));
        }
      }
      game.costs = c;
      break;
    }
  }
  validate(game);
  return game;
}

}  // namespace mcg

#endif  // MCG_GENERATE_HPP
