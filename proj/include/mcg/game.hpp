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

#ifndef MCG_GAME_HPP
#define MCG_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mcg/costs.hpp"
#include "mcg/errors.hpp"
#include "mcg/matroid.hpp"
#include "mcg/numeric.hpp"
#include "mcg/subset.hpp"

namespace mcg {

// Order matches the alternatives of CostChannels.
enum class Flavor {
  kClassic,
  kWeighted,
  kPlayerSpecific,
  kComplementarities,
  kMixed,
  kPlayerSpecificMixed,
  kMixedSetFunctional,
};

inline const std::vector<std::pair<Flavor, std::string>>& flavor_names() {
  static const std::vector<std::pair<Flavor, std::string>> names = {
      {Flavor::kClassic, "classic"},
      {Flavor::kWeighted, "weighted"},
      {Flavor::kPlayerSpecific, "player-specific"},
      {Flavor::kComplementarities, "complementarities"},
      {Flavor::kMixed, "mixed"},
      {Flavor::kPlayerSpecificMixed, "player-specific-mixed"},
      {Flavor::kMixedSetFunctional, "mixed-set-functional"},
  };
  return names;
}

inline std::string to_string(Flavor f) {
  for (const auto& [flavor, name] : flavor_names()) {
    if (flavor == f) return name;
  }
  return "?";
}

inline std::optional<Flavor> parse_flavor(const std::string& name) {
  for (const auto& [flavor, n] : flavor_names()) {
    if (n == name) return flavor;
  }
  return std::nullopt;
}

// A strategy family given by enumeration; need not be a matroid.
struct ExplicitStrategies {
  std::vector<Subset> strategies;
  bool operator==(const ExplicitStrategies&) const = default;
};

using StrategySpace = std::variant<MatroidOracle, ExplicitStrategies>;

inline ExplicitStrategies make_explicit_strategies(std::vector<Subset> strategies) {
  std::sort(strategies.begin(), strategies.end(), canonical_less);
  strategies.erase(std::unique(strategies.begin(), strategies.end()), strategies.end());
  return {std::move(strategies)};
}

// c_e(n_e)
struct ClassicCosts {
  std::vector<ScalarFunction> cost;
  bool operator==(const ClassicCosts&) const = default;
};
// c_e(w(N_e))
struct WeightedCosts {
  std::vector<ScalarFunction> cost;
  bool operator==(const WeightedCosts&) const = default;
};
// c_{i,e}(n_e), indexed [player][resource]
struct PlayerSpecificCosts {
  std::vector<std::vector<ScalarFunction>> cost;
  bool operator==(const PlayerSpecificCosts&) const = default;
};
// g(c_e(N_e) for e in S_i)
struct ComplementarityCosts {
  std::vector<SetCost> cost;
  Aggregator aggregator = Aggregator::sum();
  bool operator==(const ComplementarityCosts&) const = default;
};
// alpha_i * sum l_e(n_e) + (1 - alpha_i) * max b_e(n_e)
struct MixedCosts {
  std::vector<ScalarFunction> latency;
  std::vector<ScalarFunction> bottleneck;
  bool operator==(const MixedCosts&) const = default;
};
struct PlayerSpecificMixedCosts {
  std::vector<std::vector<ScalarFunction>> latency;
  std::vector<std::vector<ScalarFunction>> bottleneck;
  bool operator==(const PlayerSpecificMixedCosts&) const = default;
};
// Set-functional latency and bottleneck channels; `dependence` is the
// optional d with b_e = d o l_e.
struct MixedSetCosts {
  std::vector<SetCost> latency;
  std::vector<SetCost> bottleneck;
  std::optional<ScalarFunction> dependence;
  bool operator==(const MixedSetCosts&) const = default;
};

using CostChannels = std::variant<ClassicCosts, WeightedCosts, PlayerSpecificCosts,
                                  ComplementarityCosts, MixedCosts, PlayerSpecificMixedCosts,
                                  MixedSetCosts>;

struct GameInstance {
  int players = 0;
  std::vector<std::string> resources;
  std::vector<Rational> weights;  // empty unless some channel needs them
  std::vector<Rational> alphas;   // mixed flavors only
  std::vector<StrategySpace> spaces;
  CostChannels costs;
  std::optional<std::uint64_t> seed;
  double tolerance = kDefaultTolerance;

  Flavor flavor() const { return static_cast<Flavor>(costs.index()); }
  int resource_count() const { return static_cast<int>(resources.size()); }
  bool is_mixed() const {
    return flavor() == Flavor::kMixed || flavor() == Flavor::kPlayerSpecificMixed ||
           flavor() == Flavor::kMixedSetFunctional;
  }

  bool operator==(const GameInstance&) const = default;
};

// S = (S_1, ..., S_n), zero-based players.
using StrategyProfile = std::vector<Subset>;

// N_e(S) and n_e(S) for every resource.
struct Congestion {
  std::vector<PlayerSet> users;
  std::vector<int> count;
};

inline constexpr long long kDefaultProfileCap = 10'000'000;

inline bool is_matroid_space(const StrategySpace& space) {
  return std::holds_alternative<MatroidOracle>(space);
}

inline bool all_matroid_spaces(const GameInstance& game) {
  return std::all_of(game.spaces.begin(), game.spaces.end(), is_matroid_space);
}

inline Subset space_ground(const StrategySpace& space) {
  if (const auto* m = std::get_if<MatroidOracle>(&space)) return m->ground();
  Subset g = 0;
  for (Subset s : std::get<ExplicitStrategies>(space).strategies) g |= s;
  return g;
}

inline bool is_strategy(const GameInstance& game, int player, Subset s) {
  const auto& space = game.spaces.at(player);
  if (const auto* m = std::get_if<MatroidOracle>(&space)) {
    return is_subset_of(s, m->ground()) && m->is_base(s);
  }
  const auto& list = std::get<ExplicitStrategies>(space).strategies;
  return std::binary_search(list.begin(), list.end(), s, canonical_less);
}

// All strategies of a player, canonical order.
inline std::vector<Subset> strategies_of(const GameInstance& game, int player,
                                         int cap = kDefaultEnumerationCap) {
  const auto& space = game.spaces.at(player);
  if (const auto* m = std::get_if<MatroidOracle>(&space)) return enumerate_bases(*m, cap);
  return std::get<ExplicitStrategies>(space).strategies;
}

inline Congestion congestion_of(const GameInstance& game, const StrategyProfile& profile) {
  if (static_cast<int>(profile.size()) != game.players) {
    throw ContractError("profile has " + std::to_string(profile.size()) + " strategies for " +
                        std::to_string(game.players) + " players");
  }
  Congestion c{std::vector<PlayerSet>(game.resource_count(), 0),
               std::vector<int>(game.resource_count(), 0)};
  for (int i = 0; i < game.players; ++i) {
    if (!is_strategy(game, i, profile[i])) {
      throw ContractError("player " + std::to_string(i + 1) + " plays " +
                          format_subset(profile[i], game.resources) + ", not a strategy");
    }
    for (int e : elements_of(profile[i])) {
      c.users[e] |= static_cast<PlayerSet>(bit(i));
      ++c.count[e];
    }
  }
  return c;
}

namespace detail {

inline PlayerSet users_of(const StrategyProfile& profile, int e) {
  PlayerSet users = 0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (contains(profile[j], e)) users |= static_cast<PlayerSet>(bit(static_cast<int>(j)));
  }
  return users;
}

inline CostValue count_cost(const ScalarFunction& f, PlayerSet users) {
  return CostValue(f(Rational(cardinality(users))));
}

// gamma_i, or a strictly increasing transform of it when `as_key`.
inline CostValue evaluate_player_cost(const GameInstance& game, const StrategyProfile& profile,
                                      int i, bool as_key) {
  const Subset mine = profile.at(i);
  const std::vector<int> elems = elements_of(mine);
  return std::visit(
      [&](const auto& channels) -> CostValue {
        using T = std::decay_t<decltype(channels)>;
        if constexpr (std::is_same_v<T, ClassicCosts>) {
          CostValue total(0);
          for (int e : elems) total += count_cost(channels.cost[e], users_of(profile, e));
          return total;
        } else if constexpr (std::is_same_v<T, WeightedCosts>) {
          CostValue total(0);
          for (int e : elems) {
            total += CostValue(channels.cost[e](total_weight(users_of(profile, e), game.weights)));
          }
          return total;
        } else if constexpr (std::is_same_v<T, PlayerSpecificCosts>) {
          CostValue total(0);
          for (int e : elems) total += count_cost(channels.cost[i][e], users_of(profile, e));
          return total;
        } else if constexpr (std::is_same_v<T, ComplementarityCosts>) {
          std::vector<CostValue> v;
          v.reserve(elems.size());
          for (int e : elems) {
            v.push_back(eval_set_cost(channels.cost[e], users_of(profile, e), game.weights));
          }
          return as_key ? aggregate_key(channels.aggregator, v) : aggregate(channels.aggregator, v);
        } else {
          CostValue latency(0);
          CostValue bottleneck(0);
          for (int e : elems) {
            PlayerSet users = users_of(profile, e);
            CostValue l, b;
            if constexpr (std::is_same_v<T, MixedCosts>) {
              l = count_cost(channels.latency[e], users);
              b = count_cost(channels.bottleneck[e], users);
            } else if constexpr (std::is_same_v<T, PlayerSpecificMixedCosts>) {
              l = count_cost(channels.latency[i][e], users);
              b = count_cost(channels.bottleneck[i][e], users);
            } else {
              l = eval_set_cost(channels.latency[e], users, game.weights);
              b = eval_set_cost(channels.bottleneck[e], users, game.weights);
            }
            latency += l;
            bottleneck = max_of(bottleneck, b, game.tolerance);
          }
          const Rational& alpha = game.alphas.at(i);
          return CostValue(alpha) * latency + CostValue(Rational(1) - alpha) * bottleneck;
        }
      },
      game.costs);
}

}  // namespace detail

// gamma_i(S) per the flavor's cost formula.
inline CostValue player_cost(const GameInstance& game, const StrategyProfile& profile, int i) {
  return detail::evaluate_player_cost(game, profile, i, false);
}

// Order-equivalent to player_cost; used for every improvement test.
inline CostValue player_cost_key(const GameInstance& game, const StrategyProfile& profile,
                                 int i) {
  return detail::evaluate_player_cost(game, profile, i, true);
}

// Number of pure profiles, or nullopt if it exceeds `cap`.
inline std::optional<long long> profile_count(const GameInstance& game, long long cap,
                                              int enumeration_cap = kDefaultEnumerationCap) {
  long long total = 1;
  for (int i = 0; i < game.players; ++i) {
    total *= static_cast<long long>(strategies_of(game, i, enumeration_cap).size());
    if (total > cap) return std::nullopt;
  }
  return total;
}

// Canonically smallest strategy per player.
inline StrategyProfile default_profile(const GameInstance& game) {
  StrategyProfile s(game.players);
  for (int i = 0; i < game.players; ++i) {
    const auto& space = game.spaces[i];
    if (const auto* m = std::get_if<MatroidOracle>(&space)) {
      // Greedy with weight = element index yields the lexicographically
      // smallest base.
      s[i] = min_weight_base(*m, [](int e) { return CostValue(e); });
    } else {
      s[i] = std::get<ExplicitStrategies>(space).strategies.front();
    }
  }
  return s;
}

// Players who may use resource e in some strategy.
inline PlayerSet potential_users(const GameInstance& game, int e) {
  PlayerSet users = 0;
  for (int i = 0; i < game.players; ++i) {
    if (contains(space_ground(game.spaces[i]), e)) users |= static_cast<PlayerSet>(bit(i));
  }
  return users;
}

// Every value c_e(X) with X a set of potential users of e. Complementarity
// flavor only; sorted, distinct.
inline std::vector<CostValue> reachable_cost_values(const GameInstance& game) {
  const auto* channels = std::get_if<ComplementarityCosts>(&game.costs);
  if (!channels) throw ContractError("reachable cost values need the complementarities flavor");
  std::set<Rational> values;
  for (int e = 0; e < game.resource_count(); ++e) {
    const PlayerSet users = potential_users(game, e);
    PlayerSet x = users;
    while (true) {
      values.insert(eval_set_cost(channels->cost[e], x, game.weights).exact());
      if (x == 0) break;
      x = (x - 1) & users;
    }
  }
  return {values.begin(), values.end()};
}

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

inline std::string player_set_text(PlayerSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : elements_of(s)) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

inline void validate_set_cost(const GameInstance& game, const SetCost& c,
                              const std::string& label) {
  if (c.needs_weights()) {
    require(static_cast<int>(game.weights.size()) == game.players,
            label + ": weight-induced cost but no player weights");
  }
  if (const auto* t = std::get_if<SetCost::ExplicitTable>(&c.form)) {
    require(t->values.size() == (std::size_t{1} << game.players),
            label + ": set table needs " + std::to_string(std::size_t{1} << game.players) +
                " entries, has " + std::to_string(t->values.size()));
  }
  require(eval_set_cost(c, 0, game.weights).exact() >= 0, label + ": negative cost");
  auto verdict = check_monotone_set_cost(c, game.players, game.weights);
  if (!verdict.monotone()) {
    throw ValidationError(label + ": not monotone, c(" + player_set_text(verdict.witness->first) +
                          ") > c(" + player_set_text(verdict.witness->second) + ")");
  }
}

inline void validate_count(const GameInstance& game, const ScalarFunction& f,
                           const std::string& label) {
  validate_set_cost(game, SetCost::count_based(f), label);
}

}  // namespace detail

// Load-time checks: shapes, matroid spaces, nonnegative monotone channels,
// equal strategy cardinality for complementarities. Throws ValidationError.
inline void validate(const GameInstance& game) {
  using detail::require;
  const int n = game.players;
  const int m = game.resource_count();
  require(n >= 1 && n <= kMaxPlayers, "player count must be in [1, 20]");
  require(m >= 1 && m <= kMaxResources, "resource count must be in [1, 64]");
  {
    std::set<std::string> names(game.resources.begin(), game.resources.end());
    require(static_cast<int>(names.size()) == m, "resource names must be unique");
  }
  require(static_cast<int>(game.spaces.size()) == n, "one strategy space per player required");
  for (int i = 0; i < n; ++i) {
    const std::string label = "player " + std::to_string(i + 1);
    require(is_subset_of(space_ground(game.spaces[i]), full_set(m)),
            label + ": strategy space uses unknown resources");
    if (const auto* list = std::get_if<ExplicitStrategies>(&game.spaces[i])) {
      require(!list->strategies.empty(), label + ": empty strategy list");
    }
  }
  if (!game.weights.empty()) {
    require(static_cast<int>(game.weights.size()) == n, "one weight per player required");
    for (const auto& w : game.weights) require(w >= 0, "weights must be nonnegative");
  }
  if (game.is_mixed()) {
    require(static_cast<int>(game.alphas.size()) == n, "one preference value per player required");
    for (const auto& a : game.alphas) require(a >= 0 && a <= 1, "preference values lie in [0, 1]");
  } else {
    require(game.alphas.empty(), "preference values are only meaningful for mixed flavors");
  }
  auto resource_label = [&](const std::string& channel, int e) {
    return channel + " " + game.resources[e];
  };
  auto per_resource = [&](const auto& v, const std::string& what) {
    require(static_cast<int>(v.size()) == m, what + ": one entry per resource required");
  };
  auto per_player = [&](const auto& v, const std::string& what) {
    require(static_cast<int>(v.size()) == n, what + ": one row per player required");
    for (const auto& row : v) per_resource(row, what);
  };
  std::visit(
      [&](const auto& channels) {
        using T = std::decay_t<decltype(channels)>;
        if constexpr (std::is_same_v<T, ClassicCosts>) {
          per_resource(channels.cost, "cost");
          for (int e = 0; e < m; ++e) {
            detail::validate_count(game, channels.cost[e], resource_label("cost", e));
          }
        } else if constexpr (std::is_same_v<T, WeightedCosts>) {
          per_resource(channels.cost, "cost");
          require(static_cast<int>(game.weights.size()) == n, "weighted game needs weights");
          for (int e = 0; e < m; ++e) {
            detail::validate_set_cost(game, SetCost::weight_induced(channels.cost[e]),
                                      resource_label("cost", e));
          }
        } else if constexpr (std::is_same_v<T, PlayerSpecificCosts>) {
          per_player(channels.cost, "cost");
          for (int i = 0; i < n; ++i) {
            for (int e = 0; e < m; ++e) {
              detail::validate_count(game, channels.cost[i][e],
                                     "cost " + std::to_string(i + 1) + " " + game.resources[e]);
            }
          }
        } else if constexpr (std::is_same_v<T, ComplementarityCosts>) {
          per_resource(channels.cost, "cost");
          for (int e = 0; e < m; ++e) {
            detail::validate_set_cost(game, channels.cost[e], resource_label("cost", e));
          }
        } else if constexpr (std::is_same_v<T, MixedCosts>) {
          per_resource(channels.latency, "latency");
          per_resource(channels.bottleneck, "bottleneck");
          for (int e = 0; e < m; ++e) {
            detail::validate_count(game, channels.latency[e], resource_label("latency", e));
            detail::validate_count(game, channels.bottleneck[e], resource_label("bottleneck", e));
          }
        } else if constexpr (std::is_same_v<T, PlayerSpecificMixedCosts>) {
          per_player(channels.latency, "latency");
          per_player(channels.bottleneck, "bottleneck");
          for (int i = 0; i < n; ++i) {
            for (int e = 0; e < m; ++e) {
              std::string suffix = " " + std::to_string(i + 1) + " " + game.resources[e];
              detail::validate_count(game, channels.latency[i][e], "latency" + suffix);
              detail::validate_count(game, channels.bottleneck[i][e], "bottleneck" + suffix);
            }
          }
        } else {
          per_resource(channels.latency, "latency");
          per_resource(channels.bottleneck, "bottleneck");
          for (int e = 0; e < m; ++e) {
            detail::validate_set_cost(game, channels.latency[e], resource_label("latency", e));
            detail::validate_set_cost(game, channels.bottleneck[e],
                                      resource_label("bottleneck", e));
          }
        }
      },
      game.costs);

  if (const auto* channels = std::get_if<ComplementarityCosts>(&game.costs)) {
    const Aggregator& g = channels->aggregator;
    std::optional<int> size;
    for (int i = 0; i < n; ++i) {
      std::vector<Subset> sample;
      if (const auto* mat = std::get_if<MatroidOracle>(&game.spaces[i])) {
        sample.push_back(min_weight_base(*mat, [](int) { return CostValue(0); }));
      } else {
        sample = std::get<ExplicitStrategies>(game.spaces[i]).strategies;
      }
      for (Subset s : sample) {
        int r = cardinality(s);
        if (g.arity() > 0) {
          require(r == g.arity(), "cardinality-r violation: player " + std::to_string(i + 1) +
                                      " has strategy " + format_subset(s, game.resources) +
                                      " of size " + std::to_string(r) + ", aggregator arity is " +
                                      std::to_string(g.arity()));
        } else if (g.kind() != AggregatorKind::kSum) {
          require(!size || *size == r,
                  "cardinality-r violation: strategies of sizes " + std::to_string(size.value_or(r)) +
                      " and " + std::to_string(r));
        }
        size = r;
      }
    }
    if (g.kind() == AggregatorKind::kTable) {
      std::vector<Rational> grid = g.grid();
      for (const auto& v : reachable_cost_values(game)) {
        require(std::binary_search(grid.begin(), grid.end(), v.exact()),
                "reachable cost " + v.str() + " is not on the aggregator table grid");
      }
      // The table must be total over sorted r-tuples of the grid.
      BigInt expected = 1;
      const int r = g.arity();
      const auto k = static_cast<long>(grid.size());
      for (int j = 1; j <= r; ++j) expected = expected * (k + j - 1) / j;
      require(BigInt(g.entries().size()) == expected,
              "aggregator table is not total over its grid");
    }
  }
}

// One line per player, "i: {e,...}".
inline std::string format_profile(const GameInstance& game, const StrategyProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(i + 1) + ":" + format_subset(profile[i], game.resources);
  }
  return out;
}

}  // namespace mcg

#endif  // MCG_GAME_HPP
