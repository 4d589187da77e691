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

#ifndef MCG_REDUCTIONS_HPP
#define MCG_REDUCTIONS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcg/costs.hpp"
#include "mcg/errors.hpp"
#include "mcg/game.hpp"

namespace mcg {

// Which way pure Nash equilibria provably carry over.
enum class TransferDirection { kBidirectional, kTargetToSource };

inline std::string to_string(TransferDirection d) {
  return d == TransferDirection::kBidirectional ? "bidirectional" : "target-to-source";
}

struct Reduction {
  GameInstance game;
  TransferDirection direction = TransferDirection::kBidirectional;
  std::string note;
};

// c'_e(N') = c_e(w(N')): same player costs on every profile.
inline Reduction reduce_weighted_to_setfunctional(const GameInstance& source) {
  const auto* channels = std::get_if<WeightedCosts>(&source.costs);
  if (!channels) throw ContractError("weighted-to-setfunctional needs a weighted game");
  ComplementarityCosts target;
  target.aggregator = Aggregator::sum();
  for (const auto& c : channels->cost) target.cost.push_back(SetCost::weight_induced(c));
  GameInstance out = source;
  out.costs = std::move(target);
  return {std::move(out), TransferDirection::kBidirectional,
          "weight-induced set costs c'(X) = c(w(X)); player costs identical on every profile"};
}

namespace detail {

inline PlayerSpecificMixedCosts lift_player_specific(const GameInstance& game) {
  if (const auto* ps = std::get_if<PlayerSpecificMixedCosts>(&game.costs)) return *ps;
  const auto* mixed = std::get_if<MixedCosts>(&game.costs);
  if (!mixed) throw ContractError("reduction needs a mixed-cost game with count-based channels");
  PlayerSpecificMixedCosts out;
  out.latency.assign(game.players, mixed->latency);
  out.bottleneck.assign(game.players, mixed->bottleneck);
  return out;
}

}  // namespace detail

// Singleton games: c'_{i,e}(x) = alpha_i l_{i,e}(x) + (1 - alpha_i) b_{i,e}(x),
// tabulated over x = 0..n.
inline Reduction reduce_mixed_singleton_to_player_specific(const GameInstance& source) {
  PlayerSpecificMixedCosts channels = detail::lift_player_specific(source);
  for (int i = 0; i < source.players; ++i) {
    for (Subset s : strategies_of(source, i)) {
      if (cardinality(s) != 1) {
        throw ContractError("player " + std::to_string(i + 1) + " has non-singleton strategy " +
                            format_subset(s, source.resources));
      }
    }
  }
  PlayerSpecificCosts target;
  target.cost.resize(source.players);
  for (int i = 0; i < source.players; ++i) {
    const Rational& alpha = source.alphas.at(i);
    for (int e = 0; e < source.resource_count(); ++e) {
      std::vector<Rational> values;
      for (int k = 0; k <= source.players; ++k) {
        values.push_back(alpha * channels.latency[i][e](Rational(k)) +
                         (1 - alpha) * channels.bottleneck[i][e](Rational(k)));
      }
      target.cost[i].push_back(ScalarFunction::table(std::move(values)));
    }
  }
  GameInstance out = source;
  out.alphas.clear();
  out.costs = std::move(target);
  return {std::move(out), TransferDirection::kBidirectional,
          "singleton strategies: mixed cost equals the convex combination per resource"};
}

// Matroid games with alpha_i in {0, 1}: latency for alpha = 1 players,
// bottleneck for alpha = 0 players, both summed.
inline Reduction reduce_mixed_01_to_player_specific(const GameInstance& source) {
  PlayerSpecificMixedCosts channels = detail::lift_player_specific(source);
  if (!all_matroid_spaces(source)) throw ContractError("mixed-01 reduction needs matroid spaces");
  PlayerSpecificCosts target;
  for (int i = 0; i < source.players; ++i) {
    const Rational& alpha = source.alphas.at(i);
    if (alpha != 0 && alpha != 1) {
      throw ContractError("player " + std::to_string(i + 1) + " has fractional preference " +
                          to_string(alpha));
    }
    target.cost.push_back(alpha == 1 ? channels.latency[i] : channels.bottleneck[i]);
  }
  GameInstance out = source;
  out.alphas.clear();
  out.costs = std::move(target);
  return {std::move(out), TransferDirection::kTargetToSource,
          "bottleneck players minimise the sum of b; a min-sum base also minimises the max"};
}

// Checks b_e(X) = d(l_e(X)) for every reachable X and that d is
// nondecreasing on the reachable latency values; throws ValidationError
// with the failing (resource, set) otherwise.
inline void verify_monotone_dependence(const GameInstance& game, const std::vector<SetCost>& latency,
                                       const std::vector<SetCost>& bottleneck,
                                       const ScalarFunction& d) {
  std::vector<std::pair<Rational, Rational>> seen;
  for (int e = 0; e < game.resource_count(); ++e) {
    const PlayerSet users = potential_users(game, e);
    PlayerSet x = users;
    while (true) {
      Rational l = eval_set_cost(latency[e], x, game.weights).exact();
      Rational b = eval_set_cost(bottleneck[e], x, game.weights).exact();
      Rational dl;
      try {
        dl = d(l);
      } catch (const DomainError&) {
        throw ValidationError("dependence map undefined at latency " + to_string(l) +
                              " of resource " + game.resources[e]);
      }
      if (dl != b) {
        throw ValidationError("monotone dependence fails at resource " + game.resources[e] +
                              ", players " + detail::player_set_text(x) + ": b = " + to_string(b) +
                              " but d(l) = " + to_string(dl));
      }
      seen.emplace_back(l, dl);
      if (x == 0) break;
      x = (x - 1) & users;
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 1; k < seen.size(); ++k) {
    if (seen[k].second < seen[k - 1].second) {
      throw ValidationError("dependence map decreases between " + to_string(seen[k - 1].first) +
                            " and " + to_string(seen[k].first));
    }
  }
}

// Recovers a dependence map from the reachable (latency, bottleneck) pairs
// when one exists.
inline std::optional<ScalarFunction> infer_monotone_dependence(const GameInstance& game,
                                                               const std::vector<SetCost>& latency,
                                                               const std::vector<SetCost>& bottleneck) {
  std::map<Rational, Rational> d;
  for (int e = 0; e < game.resource_count(); ++e) {
    const PlayerSet users = potential_users(game, e);
    PlayerSet x = users;
    while (true) {
      Rational l = eval_set_cost(latency[e], x, game.weights).exact();
      Rational b = eval_set_cost(bottleneck[e], x, game.weights).exact();
      auto [it, inserted] = d.emplace(l, b);
      if (!inserted && it->second != b) return std::nullopt;
      if (x == 0) break;
      x = (x - 1) & users;
    }
  }
  Rational previous = -1;
  for (const auto& [l, b] : d) {
    if (b < previous) return std::nullopt;
    previous = b;
  }
  return ScalarFunction::points({d.begin(), d.end()});
}

// Mixed games known to possess an equilibrium: matroid spaces together with
// singleton strategies, preferences in {0, 1}, or a monotone dependence.
inline bool mixed_game_conforms(const GameInstance& game) {
  if (!all_matroid_spaces(game)) return false;
  bool singleton = true;
  for (const auto& space : game.spaces) singleton = singleton && std::get<MatroidOracle>(space).rank() == 1;
  if (singleton) return true;
  if (std::all_of(game.alphas.begin(), game.alphas.end(), [](const Rational& a) { return a == 0 || a == 1; })) {
    return true;
  }
  std::vector<SetCost> latency, bottleneck;
  if (const auto* set = std::get_if<MixedSetCosts>(&game.costs)) {
    latency = set->latency;
    bottleneck = set->bottleneck;
  } else if (const auto* mixed = std::get_if<MixedCosts>(&game.costs)) {
    for (const auto& f : mixed->latency) latency.push_back(SetCost::count_based(f));
    for (const auto& f : mixed->bottleneck) bottleneck.push_back(SetCost::count_based(f));
  } else {
    return false;
  }
  return infer_monotone_dependence(game, latency, bottleneck).has_value();
}

// Monotone dependence b_e = d o l_e: equilibria of the latency-only
// set-functional game are equilibria of the mixed game.
inline Reduction reduce_mixed_md_to_setfunctional(const GameInstance& source,
                                                  std::optional<ScalarFunction> d = std::nullopt) {
  std::vector<SetCost> latency, bottleneck;
  if (const auto* set = std::get_if<MixedSetCosts>(&source.costs)) {
    latency = set->latency;
    bottleneck = set->bottleneck;
    if (!d) d = set->dependence;
  } else if (const auto* mixed = std::get_if<MixedCosts>(&source.costs)) {
    for (const auto& f : mixed->latency) latency.push_back(SetCost::count_based(f));
    for (const auto& f : mixed->bottleneck) bottleneck.push_back(SetCost::count_based(f));
  } else {
    throw ContractError("md reduction needs a mixed game with shared channels");
  }
  if (!d) d = infer_monotone_dependence(source, latency, bottleneck);
  if (!d) throw ContractError("no monotone dependence map relates the bottleneck and latency costs");
  verify_monotone_dependence(source, latency, bottleneck, *d);
  GameInstance out = source;
  out.alphas.clear();
  out.costs = ComplementarityCosts{std::move(latency), Aggregator::sum()};
  return {std::move(out), TransferDirection::kTargetToSource,
          "c_e = l_e; a min-sum base also minimises max l and hence max d(l)"};
}

}  // namespace mcg

#endif  // MCG_REDUCTIONS_HPP
