// Copyright 2026 The Achievement Games Authors
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

#include "integer_game.h"

#include <limits>
#include <stdexcept>

namespace achieve::internal {
namespace {

// Largest magnitude allowed after scaling; leaves room for sums over agents
// and goals without overflowing 64 bits.
constexpr std::int64_t kScaledLimit = std::int64_t{1} << 48;

std::int64_t Scale(const Rational& r, std::int64_t scale) {
  __int128 v = static_cast<__int128>(r.numerator()) * (scale / r.denominator());
  if (v > kScaledLimit || v < -kScaledLimit) {
    throw std::overflow_error("game values too large for exact enumeration");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntegerGame::IntegerGame(const Game& game)
    : num_agents(game.num_agents()),
      num_goals(game.num_goals()),
      num_costs(game.costs().size()) {
  for (const auto& c : game.costs().values()) {
    scale = CommonDenominator(scale, c.denominator());
  }
  for (const auto& g : game.thresholds()) {
    scale = CommonDenominator(scale, g.denominator());
  }
  for (int i = 0; i < num_agents; ++i) {
    for (const auto& w : game.motivations().row(i)) {
      scale = CommonDenominator(scale, w.denominator());
    }
  }
  for (const auto& c : game.costs().values()) costs.push_back(Scale(c, scale));
  for (const auto& g : game.thresholds()) {
    thresholds.push_back(Scale(g, scale));
  }
  for (int i = 0; i < num_agents; ++i) {
    for (const auto& w : game.motivations().row(i)) {
      motivations.push_back(Scale(w, scale));
    }
  }
}

}  // namespace achieve::internal
