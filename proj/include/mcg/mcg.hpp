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

#ifndef MCG_MCG_HPP
#define MCG_MCG_HPP

#include "mcg/costs.hpp"
#include "mcg/dynamics.hpp"
#include "mcg/errors.hpp"
#include "mcg/game.hpp"
#include "mcg/generate.hpp"
#include "mcg/hunt.hpp"
#include "mcg/io.hpp"
#include "mcg/matroid.hpp"
#include "mcg/numeric.hpp"
#include "mcg/reductions.hpp"
#include "mcg/subset.hpp"

#endif  // MCG_MCG_HPP
