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

#ifndef MCG_HUNT_HPP
#define MCG_HUNT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mcg/dynamics.hpp"
#include "mcg/generate.hpp"
#include "mcg/reductions.hpp"

namespace mcg {

struct HuntParams {
  Flavor flavor = Flavor::kMixed;
  int players = 3;
  int resources = 4;
  int rank = 2;
  int max_value = 6;
  MatroidFamily matroids = MatroidFamily::kAny;
  long long attempts = 100'000;
  std::uint64_t seed = 0;
};

struct HuntResult {
  std::optional<GameInstance> game;
  long long attempts = 0;
  long long skipped_conforming = 0;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Random search over mixed matroid games outside the classes known to have
// an equilibrium. An equilibrium-free conforming game would contradict the
// theory and is reported as a logic_error.
inline HuntResult hunt_no_pne(const HuntParams& params) {
  if (params.flavor != Flavor::kMixed && params.flavor != Flavor::kPlayerSpecificMixed &&
      params.flavor != Flavor::kMixedSetFunctional) {
    throw DomainError("hunt searches mixed flavors only");
  }
  HuntResult result;
  for (long long k = 0; k < params.attempts; ++k) {
    ++result.attempts;
    GenerateParams gp;
    gp.flavor = params.flavor;
    gp.players = params.players;
    gp.resources = params.resources;
    gp.rank = params.rank;
    gp.max_value = params.max_value;
    gp.matroids = params.matroids;
    gp.seed = derive_seed(params.seed, static_cast<std::uint64_t>(k));
    GameInstance game = generate_game(gp);
    bool conforming = params.flavor != Flavor::kPlayerSpecificMixed && mixed_game_conforms(game);
    if (conforming) {
      ++result.skipped_conforming;
      continue;
    }
    if (brute_force_pne(game).empty()) {
      result.game = std::move(game);
      return result;
    }
  }
  return result;
}

}  // namespace mcg

#endif  // MCG_HUNT_HPP
