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

#ifndef MCG_DYNAMICS_HPP
#define MCG_DYNAMICS_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mcg/costs.hpp"
#include "mcg/errors.hpp"
#include "mcg/game.hpp"
#include "mcg/matroid.hpp"
#include "mcg/reductions.hpp"

namespace mcg {

struct Deviation {
  int player = 0;
  Subset strategy = 0;
};

struct PneVerdict {
  std::optional<Deviation> deviation;
  bool is_pne() const { return !deviation.has_value(); }
};

namespace detail {

inline StrategyProfile with_strategy(StrategyProfile profile, int player, Subset s) {
  profile[player] = s;
  return profile;
}

inline PneVerdict check_pne(const GameInstance& game, const StrategyProfile& profile,
                            const std::vector<std::vector<Subset>>& strategies) {
  StrategyProfile probe = profile;
  for (int i = 0; i < game.players; ++i) {
    const CostValue current = player_cost_key(game, profile, i);
    for (Subset alt : strategies[i]) {
      if (alt == profile[i]) continue;
      probe[i] = alt;
      if (less_than(player_cost_key(game, probe, i), current, game.tolerance)) {
        return {Deviation{i, alt}};
      }
    }
    probe[i] = profile[i];
  }
  return {};
}

inline std::vector<std::vector<Subset>> all_strategies(const GameInstance& game, int cap) {
  std::vector<std::vector<Subset>> out;
  for (int i = 0; i < game.players; ++i) out.push_back(strategies_of(game, i, cap));
  return out;
}

}  // namespace detail

// PNE iff no player has a strictly improving unilateral deviation; otherwise
// the first deviation in (player, canonical strategy) order.
inline PneVerdict is_pne(const GameInstance& game, const StrategyProfile& profile,
                         int enumeration_cap = kDefaultEnumerationCap) {
  congestion_of(game, profile);
  return detail::check_pne(game, profile, detail::all_strategies(game, enumeration_cap));
}

// Swap e* out of S_i and f* in.
struct LocalMove {
  int removed = -1;
  int added = -1;
  bool operator==(const LocalMove&) const = default;
};

// First strictly improving single swap for player i, e* in canonical order
// over S_i and f* over the rest of the player's ground set.
inline std::optional<LocalMove> improving_local_move(const GameInstance& game,
                                                     const StrategyProfile& profile, int i) {
  const Subset current = profile.at(i);
  const Subset outside = space_ground(game.spaces.at(i)) & ~current;
  const CostValue before = player_cost_key(game, profile, i);
  StrategyProfile probe = profile;
  for (int e : elements_of(current)) {
    for (int f : elements_of(outside)) {
      Subset swapped = (current & ~bit(e)) | bit(f);
      if (!is_strategy(game, i, swapped)) continue;
      probe[i] = swapped;
      if (less_than(player_cost_key(game, probe, i), before, game.tolerance)) {
        return LocalMove{e, f};
      }
    }
  }
  return std::nullopt;
}

// The same game written as a set-functional game with complementarities:
// classic costs become count-based set costs, weighted costs go through
// c'(X) = c(w(X)). Other flavors have no such view.
inline GameInstance complementarity_view(const GameInstance& game) {
  if (std::holds_alternative<ComplementarityCosts>(game.costs)) return game;
  if (std::holds_alternative<WeightedCosts>(game.costs)) {
    return reduce_weighted_to_setfunctional(game).game;
  }
  if (const auto* classic = std::get_if<ClassicCosts>(&game.costs)) {
    GameInstance out = game;
    ComplementarityCosts channels;
    for (const auto& f : classic->cost) channels.cost.push_back(SetCost::count_based(f));
    out.costs = std::move(channels);
    return out;
  }
  throw ContractError("no lexicographic potential for the " + to_string(game.flavor()) +
                      " flavor");
}

// phi_e(S) = (c_e(N_e(S)), n_e(S)).
struct PhiEntry {
  CostValue cost;
  int count = 0;
  int resource = -1;
  bool operator==(const PhiEntry&) const = default;
};

// Entries sorted lexicographically nonincreasing; ties in the pair order
// broken by resource index.
struct Potential {
  std::vector<PhiEntry> entries;
  bool operator==(const Potential&) const = default;

  // "cost:count" pairs joined by ';'.
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k) out += ";";
      out += entries[k].cost.str() + ":" + std::to_string(entries[k].count);
    }
    return out;
  }
};

// Everything needed to evaluate and compare potentials of one game.
class PotentialContext {
 public:
  // Throws ContractError for flavors without a potential and
  // NotWeaklyMonotoneError when a table aggregator induces no preorder on
  // the reachable cost values.
  explicit PotentialContext(const GameInstance& game)
      : view_(complementarity_view(game)),
        channels_(std::get<ComplementarityCosts>(view_.costs)),
        order_(make_order(view_)) {}

  const GameInstance& view() const { return view_; }
  const CostOrder& order() const { return order_; }

  PhiEntry entry(const Congestion& congestion, int e) const {
    return {eval_set_cost(channels_.cost[e], congestion.users[e], view_.weights),
            congestion.count[e], e};
  }

  // Pair order: cost under <=_g, then count.
  std::weak_ordering compare_entries(const PhiEntry& a, const PhiEntry& b) const {
    auto c = order_.compare(a.cost, b.cost);
    if (c != std::weak_ordering::equivalent) return c;
    return a.count <=> b.count;
  }

  Potential potential(const StrategyProfile& profile) const {
    Congestion congestion = congestion_of(view_, profile);
    Potential p;
    for (int e = 0; e < view_.resource_count(); ++e) p.entries.push_back(entry(congestion, e));
    sort(p);
    return p;
  }

  // Recomputes only the entries of the swapped resources.
  Potential update(const Potential& before, const StrategyProfile& after, int removed,
                   int added) const {
    Congestion congestion = congestion_of(view_, after);
    Potential p = before;
    for (auto& entry_ref : p.entries) {
      if (entry_ref.resource == removed || entry_ref.resource == added) {
        entry_ref = entry(congestion, entry_ref.resource);
      }
    }
    sort(p);
    return p;
  }

  // Lexicographic comparison; the first position whose entries are not
  // equivalent decides.
  std::weak_ordering compare(const Potential& a, const Potential& b) const {
    if (a.entries.size() != b.entries.size()) throw ContractError("potentials of different games");
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
      auto c = compare_entries(a.entries[k], b.entries[k]);
      if (c != std::weak_ordering::equivalent) return c;
    }
    return std::weak_ordering::equivalent;
  }

 private:
  static CostOrder make_order(const GameInstance& view) {
    const auto& g = std::get<ComplementarityCosts>(view.costs).aggregator;
    if (g.kind() != AggregatorKind::kTable) return CostOrder(g, {}, view.tolerance);
    return CostOrder(g, reachable_cost_values(view), view.tolerance);
  }

  void sort(Potential& p) const {
    std::sort(p.entries.begin(), p.entries.end(), [&](const PhiEntry& a, const PhiEntry& b) {
      auto c = compare_entries(a, b);
      if (c != std::weak_ordering::equivalent) return c == std::weak_ordering::greater;
      return a.resource < b.resource;
    });
  }

  GameInstance view_;
  ComplementarityCosts channels_;
  CostOrder order_;
};

inline Potential potential(const GameInstance& game, const StrategyProfile& profile) {
  return PotentialContext(game).potential(profile);
}

inline std::weak_ordering potential_compare(const GameInstance& game, const Potential& a,
                                            const Potential& b) {
  return PotentialContext(game).compare(a, b);
}

// Which hypotheses of the existence theorem hold for an instance.
struct Conformity {
  bool matroid_spaces = false;
  bool has_potential = false;      // flavor admits the set-functional view
  bool weakly_monotone = false;    // aggregator, on the reachable domain for tables
  bool costs_monotone_wrt_g = false;
  bool reachable_domain_only = false;
  std::string detail;

  bool certified() const {
    return matroid_spaces && has_potential && weakly_monotone && costs_monotone_wrt_g;
  }
};

inline Conformity assess_conformity(const GameInstance& game) {
  Conformity c;
  c.matroid_spaces = all_matroid_spaces(game);
  if (!c.matroid_spaces) c.detail = "some strategy space is not a matroid";
  if (game.flavor() != Flavor::kClassic && game.flavor() != Flavor::kWeighted &&
      game.flavor() != Flavor::kComplementarities) {
    if (c.detail.empty()) c.detail = "flavor " + to_string(game.flavor()) + " has no potential";
    return c;
  }
  c.has_potential = true;
  GameInstance view = complementarity_view(game);
  const auto& channels = std::get<ComplementarityCosts>(view.costs);
  if (channels.aggregator.kind() != AggregatorKind::kTable) {
    // Coordinate-monotone: <=_g is <= and load validation already
    // established X subset Y => c(X) <= c(Y).
    c.weakly_monotone = true;
    c.costs_monotone_wrt_g = true;
    return c;
  }
  c.reachable_domain_only = true;
  std::vector<CostValue> domain = reachable_cost_values(view);
  auto wm = check_weak_monotonicity(channels.aggregator, domain, view.tolerance);
  c.weakly_monotone = wm.weakly_monotone();
  if (!c.weakly_monotone) {
    c.detail = "aggregator orders " + wm.witness->x.str() + " and " + wm.witness->y.str() +
               " inconsistently";
    return c;
  }
  c.costs_monotone_wrt_g = true;
  for (int e = 0; e < view.resource_count(); ++e) {
    auto verdict = check_cost_monotone_wrt_g(channels.cost[e], channels.aggregator, view.players,
                                             domain, view.weights, view.tolerance);
    if (!verdict.monotone()) {
      c.costs_monotone_wrt_g = false;
      c.detail = "cost of " + view.resources[e] + " not monotone with respect to g at " +
                 detail::player_set_text(verdict.witness->first) + " subset " +
                 detail::player_set_text(verdict.witness->second);
      break;
    }
  }
  return c;
}

enum class Terminal { kPne, kLocalOptimum, kCapReached, kCycle };

inline std::string to_string(Terminal t) {
  switch (t) {
    case Terminal::kPne: return "PNE";
    case Terminal::kLocalOptimum: return "local-optimum";
    case Terminal::kCapReached: return "cap-reached";
    case Terminal::kCycle: return "cycle";
  }
  return "?";
}

struct DynamicsStep {
  int player = 0;
  int removed = -1;
  int added = -1;
  CostValue gamma_before;
  CostValue gamma_after;
  std::optional<Potential> potential;  // after the step
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  Terminal terminal = Terminal::kCapReached;
  StrategyProfile initial_profile;
  StrategyProfile final_profile;
  std::optional<Potential> initial_potential;
  bool certified = false;          // the existence theorem's hypotheses hold
  bool reachable_domain_only = false;
  bool potential_strictly_decreased = true;
  std::vector<StrategyProfile> cycle;  // evidence for Terminal::kCycle
};

inline constexpr long long kDefaultStepCap = 1'000'000;

// Round-robin improving local moves until a full pass finds none.
inline DynamicsTrace run_local_move_dynamics(const GameInstance& game, StrategyProfile profile,
                                             long long cap = kDefaultStepCap,
                                             int enumeration_cap = kDefaultEnumerationCap) {
  if (cap < 1) throw ContractError("step cap must be positive");
  congestion_of(game, profile);
  DynamicsTrace trace;
  trace.initial_profile = profile;
  Conformity conformity = assess_conformity(game);
  trace.certified = conformity.certified();
  trace.reachable_domain_only = conformity.reachable_domain_only;

  std::optional<PotentialContext> context;
  if (conformity.has_potential && conformity.weakly_monotone) context.emplace(game);
  std::optional<Potential> current;
  if (context) {
    current = context->potential(profile);
    trace.initial_potential = current;
  }

  std::set<StrategyProfile> visited{profile};
  std::vector<StrategyProfile> path{profile};
  int player = 0;
  int idle = 0;
  while (idle < game.players) {
    if (static_cast<long long>(trace.steps.size()) >= cap) {
      trace.final_profile = profile;
      trace.terminal = Terminal::kCapReached;
      return trace;
    }
    auto move = improving_local_move(game, profile, player);
    if (!move) {
      ++idle;
      player = (player + 1) % game.players;
      continue;
    }
    idle = 0;
    DynamicsStep step;
    step.player = player;
    step.removed = move->removed;
    step.added = move->added;
    step.gamma_before = player_cost(game, profile, player);
    profile[player] = (profile[player] & ~bit(move->removed)) | bit(move->added);
    step.gamma_after = player_cost(game, profile, player);
    if (context) {
      Potential next = context->update(*current, profile, move->removed, move->added);
      if (context->compare(next, *current) != std::weak_ordering::less) {
        trace.potential_strictly_decreased = false;
      }
      current = next;
      step.potential = next;
    }
    trace.steps.push_back(std::move(step));
    if (!visited.insert(profile).second) {
      auto start = std::find(path.begin(), path.end(), profile);
      trace.cycle.assign(start, path.end());
      trace.cycle.push_back(profile);
      trace.final_profile = profile;
      trace.terminal = Terminal::kCycle;
      return trace;
    }
    path.push_back(profile);
    player = (player + 1) % game.players;
  }
  trace.final_profile = profile;
  trace.terminal = Terminal::kLocalOptimum;
  try {
    if (is_pne(game, profile, enumeration_cap).is_pne()) trace.terminal = Terminal::kPne;
  } catch (const ResourceLimitError&) {
    // Too large to verify exhaustively; stays a local optimum.
  }
  return trace;
}

// All pure Nash equilibria, canonical order (player 1 most significant).
inline std::vector<StrategyProfile> brute_force_pne(const GameInstance& game,
                                                    long long profile_cap = kDefaultProfileCap,
                                                    int enumeration_cap = kDefaultEnumerationCap) {
  auto strategies = detail::all_strategies(game, enumeration_cap);
  long long total = 1;
  for (const auto& s : strategies) {
    total *= static_cast<long long>(s.size());
    if (total > profile_cap) {
      throw ResourceLimitError("profile count exceeds the cap of " + std::to_string(profile_cap));
    }
  }
  std::vector<StrategyProfile> out;
  std::vector<std::size_t> idx(game.players, 0);
  StrategyProfile profile(game.players);
  while (true) {
    for (int i = 0; i < game.players; ++i) profile[i] = strategies[i][idx[i]];
    if (detail::check_pne(game, profile, strategies).is_pne()) out.push_back(profile);
    int k = game.players - 1;
    while (k >= 0 && ++idx[k] == strategies[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

// Cost of resource e to player i if i joins the other players' users of e.
inline CostValue marginal_resource_cost(const GameInstance& game, const StrategyProfile& profile,
                                        int i, int e) {
  PlayerSet users = static_cast<PlayerSet>(bit(i));
  for (int j = 0; j < game.players; ++j) {
    if (j != i && contains(profile[j], e)) users |= static_cast<PlayerSet>(bit(j));
  }
  return std::visit(
      [&](const auto& channels) -> CostValue {
        using T = std::decay_t<decltype(channels)>;
        if constexpr (std::is_same_v<T, ClassicCosts>) {
          return CostValue(channels.cost[e](Rational(cardinality(users))));
        } else if constexpr (std::is_same_v<T, WeightedCosts>) {
          return CostValue(channels.cost[e](total_weight(users, game.weights)));
        } else if constexpr (std::is_same_v<T, PlayerSpecificCosts>) {
          return CostValue(channels.cost[i][e](Rational(cardinality(users))));
        } else if constexpr (std::is_same_v<T, ComplementarityCosts>) {
          return eval_set_cost(channels.cost[e], users, game.weights);
        } else {
          throw ContractError("marginal resource cost undefined for mixed flavors");
        }
      },
      game.costs);
}

// True when gamma_i is a sum (or a max) of per-resource costs that depend
// only on the other players, so the greedy min-sum base is a best response.
inline bool greedy_best_response_applies(const GameInstance& game, int player) {
  if (!is_matroid_space(game.spaces.at(player))) return false;
  switch (game.flavor()) {
    case Flavor::kClassic:
    case Flavor::kWeighted:
    case Flavor::kPlayerSpecific:
      return true;
    case Flavor::kComplementarities: {
      auto kind = std::get<ComplementarityCosts>(game.costs).aggregator.kind();
      return kind == AggregatorKind::kSum || kind == AggregatorKind::kMax;
    }
    default:
      return false;
  }
}

inline Subset best_response(const GameInstance& game, const StrategyProfile& profile, int i,
                            int enumeration_cap = kDefaultEnumerationCap) {
  if (greedy_best_response_applies(game, i)) {
    const auto& m = std::get<MatroidOracle>(game.spaces[i]);
    return min_weight_base(m, [&](int e) { return marginal_resource_cost(game, profile, i, e); });
  }
  StrategyProfile probe = profile;
  std::optional<Subset> best;
  std::optional<CostValue> best_cost;
  for (Subset s : strategies_of(game, i, enumeration_cap)) {
    probe[i] = s;
    CostValue c = player_cost_key(game, probe, i);
    if (!best_cost || less_than(c, *best_cost, game.tolerance)) {
      best = s;
      best_cost = c;
    }
  }
  return *best;
}

struct SolverResult {
  enum class Path { kBestResponse, kExhaustive };
  StrategyProfile profile;
  Path path = Path::kBestResponse;
  long long steps = 0;
  bool cycle_detected = false;
};

inline std::string to_string(SolverResult::Path p) {
  return p == SolverResult::Path::kBestResponse ? "best-response" : "exhaustive";
}

// Best-response iteration with cycle detection; falls back to exhaustive
// search. The existence of an equilibrium in player-specific matroid games
// is guaranteed, but best-response iteration need not reach it.
inline SolverResult player_specific_solver(const GameInstance& game, long long step_cap = 10'000,
                                           long long profile_cap = kDefaultProfileCap,
                                           int enumeration_cap = kDefaultEnumerationCap) {
  SolverResult result;
  StrategyProfile profile = default_profile(game);
  std::set<StrategyProfile> history{profile};
  int player = 0;
  int idle = 0;
  while (idle < game.players && result.steps < step_cap) {
    Subset br = best_response(game, profile, player, enumeration_cap);
    StrategyProfile next = detail::with_strategy(profile, player, br);
    if (br != profile[player] && less_than(player_cost_key(game, next, player),
                                           player_cost_key(game, profile, player),
                                           game.tolerance)) {
      profile = std::move(next);
      ++result.steps;
      idle = 0;
      if (!history.insert(profile).second) {
        result.cycle_detected = true;
        break;
      }
    } else {
      ++idle;
    }
    player = (player + 1) % game.players;
  }
  if (!result.cycle_detected && idle >= game.players &&
      is_pne(game, profile, enumeration_cap).is_pne()) {
    result.profile = profile;
    return result;
  }
  auto all = brute_force_pne(game, profile_cap, enumeration_cap);
  if (all.empty()) throw std::runtime_error("no pure Nash equilibrium exists for this instance");
  result.profile = all.front();
  result.path = SolverResult::Path::kExhaustive;
  return result;
}

}  // namespace mcg

#endif  // MCG_DYNAMICS_HPP
