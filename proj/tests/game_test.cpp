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

#include "mcg/game.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mcg/generate.hpp"

namespace mcg {
namespace {

ScalarFunction linear(int slope) { return ScalarFunction::polynomial({0, slope}); }

GameInstance two_resource_classic(int players) {
  GameInstance g;
  g.players = players;
  g.resources = {"a", "b"};
  for (int i = 0; i < players; ++i) g.spaces.push_back(MatroidOracle::uniform(0b11, 1));
  g.costs = ClassicCosts{{linear(1), linear(2)}};
  return g;
}

TEST(CongestionOf, SpecExamples) {
  auto g = two_resource_classic(2);
  auto c = congestion_of(g, {0b01, 0b01});
  EXPECT_EQ(c.users[0], 0b11u);
  EXPECT_EQ(c.count[0], 2);
  EXPECT_EQ(c.count[1], 0);
  auto split = congestion_of(g, {0b01, 0b10});
  EXPECT_EQ(split.count[0], 1);
  EXPECT_EQ(split.count[1], 1);
}

TEST(CongestionOf, InvalidStrategyIsContractError) {
  auto g = two_resource_classic(2);
  EXPECT_THROW(congestion_of(g, {0b11, 0b01}), ContractError);
  EXPECT_THROW(congestion_of(g, {0b01}), ContractError);
}

TEST(CongestionOf, MatchesDefinitionOnRandomProfiles) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenerateParams p;
    p.seed = seed;
    p.players = 4;
    p.resources = 6;
    auto g = generate_game(p);
    Rng rng(seed);
    StrategyProfile s;
    for (int i = 0; i < g.players; ++i) s.push_back(rng.pick(strategies_of(g, i)));
    auto c = congestion_of(g, s);
    for (int e = 0; e < g.resource_count(); ++e) {
      int count = 0;
      for (int i = 0; i < g.players; ++i) {
        EXPECT_EQ(contains(s[i], e), ((c.users[e] >> i) & 1u) == 1u);
        count += contains(s[i], e);
      }
      EXPECT_EQ(c.count[e], count);
    }
  }
}

TEST(PlayerCost, SpecExamples) {
  GameInstance g;
  g.players = 1;
  g.resources = {"a", "b"};
  g.spaces = {MatroidOracle::uniform(0b11, 2)};
  g.costs = ClassicCosts{{linear(1), linear(2)}};
  EXPECT_EQ(player_cost(g, {0b11}, 0).exact(), 3);

  g.alphas = {Rational(1, 2)};
  g.costs = MixedCosts{{ScalarFunction::table({0, 1}), ScalarFunction::table({0, 3})},
                       {ScalarFunction::table({0, 2}), ScalarFunction::table({0, 4})}};
  validate(g);
  EXPECT_EQ(player_cost(g, {0b11}, 0).exact(), 4);

  g.alphas.clear();
  g.costs = ComplementarityCosts{{SetCost::table({0, 3}), SetCost::table({0, 4})}, Aggregator::lp(2, 2)};
  validate(g);
  EXPECT_EQ(player_cost(g, {0b11}, 0).exact(), 5);
}

TEST(PlayerCost, FlavorsAgreeAtEndpoints) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenerateParams p;
    p.flavor = Flavor::kMixed;
    p.players = 3;
    p.resources = 5;
    p.seed = seed;
    auto mixed = generate_game(p);
    const auto& ch = std::get<MixedCosts>(mixed.costs);
    GameInstance latency = mixed;
    latency.alphas.clear();
    latency.costs = ClassicCosts{ch.latency};
    GameInstance bottleneck = mixed;
    bottleneck.alphas.clear();
    std::vector<SetCost> b;
    for (const auto& f : ch.bottleneck) b.push_back(SetCost::count_based(f));
    bottleneck.costs = ComplementarityCosts{b, Aggregator::max()};
    GameInstance as_sum = latency;
    std::vector<SetCost> l;
    for (const auto& f : ch.latency) l.push_back(SetCost::count_based(f));
    as_sum.costs = ComplementarityCosts{l, Aggregator::sum()};

    Rng rng(seed + 100);
    StrategyProfile s;
    for (int i = 0; i < mixed.players; ++i) s.push_back(rng.pick(strategies_of(mixed, i)));
    for (int i = 0; i < mixed.players; ++i) {
      EXPECT_EQ(player_cost(latency, s, i), player_cost(as_sum, s, i));
      mixed.alphas.assign(mixed.players, 1);
      EXPECT_EQ(player_cost(mixed, s, i), player_cost(latency, s, i));
      mixed.alphas.assign(mixed.players, 0);
      EXPECT_EQ(player_cost(mixed, s, i), player_cost(bottleneck, s, i));
    }
  }
}

TEST(Validate, RejectsUnequalCardinalityUnderMax) {
  GameInstance g;
  g.players = 2;
  g.resources = {"a", "b", "c"};
  g.spaces = {MatroidOracle::uniform(0b111, 2), MatroidOracle::uniform(0b111, 3)};
  g.costs = ComplementarityCosts{{SetCost::table({0, 1, 1, 2}), SetCost::table({0, 1, 1, 2}),
                                  SetCost::table({0, 1, 1, 2})},
                                 Aggregator::max()};
  EXPECT_THROW(validate(g), ValidationError);
  g.costs = ComplementarityCosts{std::get<ComplementarityCosts>(g.costs).cost, Aggregator::sum()};
  EXPECT_NO_THROW(validate(g));
}

TEST(Validate, RejectsNonMonotoneAndNegativeCosts) {
  auto g = two_resource_classic(2);
  g.costs = ClassicCosts{{ScalarFunction::table({0, 2, 1}), linear(1)}};
  EXPECT_THROW(validate(g), ValidationError);
  g.costs = ClassicCosts{{ScalarFunction::polynomial({-1}), linear(1)}};
  EXPECT_THROW(validate(g), ValidationError);
  g.costs = ClassicCosts{{linear(1), linear(1)}};
  g.alphas = {1, 1};
  EXPECT_THROW(validate(g), ValidationError);
}

TEST(Validate, RejectsTableAggregatorOffGrid) {
  GameInstance g;
  g.players = 1;
  g.resources = {"a", "b"};
  g.spaces = {MatroidOracle::uniform(0b11, 1)};
  Aggregator::TableEntries t = {{{0}, 0}, {{1}, 1}};
  g.costs = ComplementarityCosts{{SetCost::table({0, 1}), SetCost::table({0, 2})}, Aggregator::table(1, t)};
  EXPECT_THROW(validate(g), ValidationError);
}

TEST(DefaultProfile, CanonicallySmallestStrategy) {
  GameInstance g;
  g.players = 2;
  g.resources = {"a", "b", "c", "d"};
  g.spaces = {MatroidOracle::uniform(0b1110, 2), make_explicit_strategies({0b1100, 0b0011})};
  g.costs = ClassicCosts{{linear(1), linear(1), linear(1), linear(1)}};
  validate(g);
  EXPECT_EQ(default_profile(g), (StrategyProfile{0b0110, 0b0011}));
}

TEST(ProfileCount, RefusesAboveCap) {
  auto g = two_resource_classic(3);
  EXPECT_EQ(*profile_count(g, 100), 8);
  EXPECT_FALSE(profile_count(g, 7));
}

}  // namespace
}  // namespace mcg
